#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvdfq/kernel.hpp"
#include "mvdfq/metrics.hpp"
#include "mvdfq/quantize.hpp"
#include "mvdfq/sequence.hpp"
#include "mvdfq/svm.hpp"

namespace mvdfq {

struct PipelineConfig {
  enum class Quantizer { uniform, kmeans, vq };

  Quantizer quantizer = Quantizer::uniform;
  int bins = 32;
  int codebook_size = 2048;
  int fit_iters = 100;  // Lloyd iteration cap for kmeans / vq fitting
  KernelSpec kernel;    // alphabet fields are filled in per fold
  double C = 1.0;
  double tol = 1e-3;
};

struct FoldPlan {
  int folds = 0;
  std::vector<int> assignment;  // fold index per dataset position
};

// Per sorted class: shuffle members, deal them round-robin over folds.
FoldPlan make_stratified_folds(const std::vector<Sequence>& data, int folds, std::uint64_t seed);

// Shuffle the sorted distinct group keys, deal whole groups round-robin.
FoldPlan make_group_folds(const std::vector<Sequence>& data, int folds, std::uint64_t seed);

struct FoldResult {
  std::vector<std::size_t> test_indices;  // dataset positions held out
  std::vector<std::string> predicted;     // aligned with test_indices
  std::vector<double> binary_scores;      // decision scores of the first model (binary runs)
  std::vector<SvmModel> models;
};

// Fits quantizer or codebook on the training part only, discretizes both
// parts, trains one-vs-rest on the training gram, predicts the held-out part.
FoldResult run_fold(const std::vector<Sequence>& data, const FoldPlan& plan, int fold,
                    const PipelineConfig& config, std::uint64_t seed);

// Aggregates run_fold over all folds. With exactly two classes the report
// includes roc50, with the lexicographically smallest label as positive.
EvalReport cross_validate(const std::vector<Sequence>& data, const PipelineConfig& config,
                          int folds, std::uint64_t seed, bool group_mode = false,
                          std::vector<FoldResult>* fold_results = nullptr);

// DiscreteSequence list for one fitted pipeline stage
std::vector<DiscreteSequence> discretize_all(const std::vector<Sequence>& data,
                                             const QuantizerModel* quantizer,
                                             const Codebook* codebook);

// Kernel spec with alphabet fields set for the given pipeline
KernelSpec resolve_kernel(const PipelineConfig& config);

}  // namespace mvdfq
