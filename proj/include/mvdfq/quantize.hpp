#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvdfq/sequence.hpp"

namespace mvdfq {

// Per-dimension discretizer. Uniform bins split [f_min, f_max] into B equal
// intervals; kmeans1d stores B-1 ascending cut points (midpoints between
// consecutive 1D k-means centers) plus the training range. Either way a value
// maps to a symbol in {0..B+1}: in-range values land in {1..B}, values below
// f_min map to 0 and values above f_max to B+1.
struct QuantizerModel {
  enum class Kind { uniform, kmeans1d };

  struct Dim {
    double f_min = 0.0;
    double f_max = 0.0;
    double delta = 0.0;         // uniform: (f_max - f_min) / B
    std::vector<double> cuts;   // kmeans1d: B-1 strictly increasing cut points
  };

  Kind kind = Kind::uniform;
  int bins = 0;  // B
  std::vector<Dim> dims;

  Symbol alphabet_size() const { return static_cast<Symbol>(bins) + 2; }
};

// Learned VQ codebook: D centroids of dimension R.
struct Codebook {
  std::vector<std::vector<double>> centroids;

  std::size_t size() const { return centroids.size(); }
  std::size_t dims() const { return centroids.empty() ? 0 : centroids[0].size(); }
};

QuantizerModel fit_uniform_quantizer(const std::vector<Sequence>& data, int bins);
QuantizerModel fit_kmeans_quantizer(const std::vector<Sequence>& data, int bins, int max_iter,
                                    std::uint64_t seed);

Symbol quantize_value(const QuantizerModel& model, std::size_t dim, double f);

/// Discretizes every dimension independently: rows[r][i] = Q(values[r][i]).
DiscreteSequence apply_dfq(const QuantizerModel& model, const Sequence& x);

Codebook fit_vq_codebook(const std::vector<Sequence>& data, int codewords, int max_iter,
                         std::uint64_t seed);

/// Collapses the sequence to one row of 1-based nearest-codeword ids
/// (Euclidean distance, ties to the lowest id).
DiscreteSequence apply_vq(const Codebook& cb, const Sequence& x);

// 1D k-means with k-means++ seeding and Lloyd iterations until assignments
// stabilize (or max_iter); returns the centers sorted ascending. Exposed for
// tests.
std::vector<double> kmeans_1d(const std::vector<double>& values, int k, int max_iter,
                              std::uint64_t seed);

void save_quantizer(const QuantizerModel& model, const std::string& path);
QuantizerModel load_quantizer(const std::string& path);
void save_codebook(const Codebook& cb, const std::string& path);
Codebook load_codebook(const std::string& path);

}  // namespace mvdfq
