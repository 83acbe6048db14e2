#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mvdfq/sequence.hpp"

namespace mvdfq {

struct KernelSpec {
  enum class Base { spectrum, mismatch, sssk };

  Base base = Base::spectrum;
  int k = 6;  // k-mer length (spectrum, mismatch)
  int m = 1;  // mismatch budget
  int t = 3;  // sssk monomer count
  int d = 5;  // sssk max gap between consecutive monomers
  bool manifold = false;
  bool cosine_normalize = false;
  Symbol alphabet_size = 0;  // |Sigma|
  Symbol alphabet_min = 0;   // lowest valid symbol (0 for DFQ, 1 for VQ)
};

// Throws InvalidParams on bad k/m/t/d, missing alphabet, or when the feature-id
// space would not fit in 64 bits.
void validate_spec(const KernelSpec& spec);

// Sparse feature vector, entries sorted by feature id. `total` is the sum of
// the raw (pre-embedding) counts; manifold_embed keeps it unchanged.
struct FeatureVector {
  std::vector<std::pair<std::uint64_t, double>> entries;
  double total = 0.0;
};

// Feature-id encoding is little-endian positional over radix
// alphabet_min + alphabet_size, so symbol values are used as digits directly.
// SSSK tuples (a1,d1,a2[,d2,a3]) use mixed radixes (S,d,S[,d,S]) with the gap
// digit stored as d_i - 1.
std::uint64_t kmer_radix(Symbol alphabet_size, Symbol alphabet_min);

FeatureVector spectrum_features(const std::vector<Symbol>& row, int k, Symbol alphabet_size,
                                Symbol alphabet_min = 0);
FeatureVector mismatch_features(const std::vector<Symbol>& row, int k, int m, Symbol alphabet_size,
                                Symbol alphabet_min = 0);
FeatureVector sssk_features(const std::vector<Symbol>& row, int t, int d, Symbol alphabet_size,
                            Symbol alphabet_min = 0);

// L1-normalize then take elementwise square roots; all-zero input stays zero.
FeatureVector manifold_embed(const FeatureVector& phi);

// Base feature map chosen by spec, with manifold embedding applied when set.
FeatureVector row_features(const std::vector<Symbol>& row, const KernelSpec& spec);

// One FeatureVector per dimension row.
std::vector<FeatureVector> sequence_features(const DiscreteSequence& dx, const KernelSpec& spec);

double univariate_kernel(const FeatureVector& fx, const FeatureVector& fy);

// Sum of per-row univariate kernels over precomputed features.
double features_dot(const std::vector<FeatureVector>& fx, const std::vector<FeatureVector>& fy);

// Full kernel between two discrete sequences, including cosine normalization
// when spec.cosine_normalize is set.
double mvdfq_kernel(const DiscreteSequence& dx, const DiscreteSequence& dy,
                    const KernelSpec& spec);

}  // namespace mvdfq
