#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvdfq/sequence.hpp"

namespace mvdfq {

struct EvalReport {
  double error_rate = 0.0;
  double macro_f1 = 0.0;
  std::vector<std::string> classes;  // sorted union of truth and predicted labels
  std::vector<std::pair<std::string, double>> per_class_f1;  // truth classes only, sorted
  std::optional<double> roc50;
  std::vector<std::vector<long>> confusion;  // [truth][predicted] over `classes`
};

// error rate, per-class F1 over classes present in truths, macro-F1, confusion
EvalReport evaluate(const std::vector<std::string>& predicted,
                    const std::vector<std::string>& truth);

// area under the ROC curve truncated at the 50th false positive, normalized
// to [0,1]; ties rank negatives first
double roc50(const std::vector<double>& scores, const std::vector<int>& labels);

}  // namespace mvdfq
