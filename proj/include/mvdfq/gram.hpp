#pragma once

#include <string>
#include <vector>

#include "mvdfq/kernel.hpp"
#include "mvdfq/sequence.hpp"

namespace mvdfq {

struct GramMatrix {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> values;

  std::size_t size() const { return ids.size(); }
  double trace() const;
};

struct CrossGram {
  std::vector<std::string> test_ids;
  std::vector<std::string> train_ids;
  std::vector<std::vector<double>> values;  // |test| x |train|
};

// Precomputes per-sequence row features once, then fills the matrix with
// sparse dot products. Cells may be distributed over OpenMP workers; values
// do not depend on the worker count.
GramMatrix compute_gram(const std::vector<DiscreteSequence>& data, const KernelSpec& spec);

// Serial baseline that recomputes features for every pair. Slow; used to
// cross-check compute_gram and as the no-cache benchmark reference.
GramMatrix compute_gram_reference(const std::vector<DiscreteSequence>& data,
                                  const KernelSpec& spec);

CrossGram compute_cross_gram(const std::vector<DiscreteSequence>& test,
                             const std::vector<DiscreteSequence>& train, const KernelSpec& spec);

double min_eigenvalue(const GramMatrix& gram);

void save_gram(const GramMatrix& gram, const std::string& path);
GramMatrix load_gram(const std::string& path);

void save_cross_gram(const CrossGram& cg, const std::string& path);
CrossGram load_cross_gram(const std::string& path);

}  // namespace mvdfq
