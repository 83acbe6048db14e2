#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvdfq/gram.hpp"

namespace mvdfq {

// alphas are stored signed (y_i * alpha_i), one per support point.
struct SvmModel {
  double C = 1.0;
  double bias = 0.0;
  std::string label_positive = "+1";
  std::string label_negative = "-1";
  std::vector<std::string> support_ids;
  std::vector<double> alphas;
};

struct TrainOptions {
  double C = 1.0;
  double tol = 1e-3;
  long max_iter = 0;                // 0 picks max(100000, 1000*N)
  std::size_t psd_check_limit = 1024;  // skip the PSD warning scan above this N
  std::vector<double>* objective_trace = nullptr;  // dual objective after each step
};

// Two-coordinate dual ascent (maximal-violating-pair SMO) on the precomputed
// Gram matrix. labels must be +1/-1 with both classes present.
SvmModel train_svm(const GramMatrix& gram, const std::vector<int>& labels,
                   const TrainOptions& opt = {});

// score for a kernel row aligned with model.support_ids
double decision(const SvmModel& model, const std::vector<double>& support_row);

// (score, label) for a kernel row aligned with the training set the model came
// from; train_ids gives the column order.
std::pair<double, std::string> predict(const SvmModel& model, const std::vector<double>& row,
                                       const std::vector<std::string>& train_ids);

// column index of each support id within train_ids
std::vector<std::size_t> support_columns(const SvmModel& model,
                                         const std::vector<std::string>& train_ids);

// largest KKT violation m(alpha) - M(alpha) of a trained model, recomputed
// from scratch against the training gram
double max_kkt_violation(const GramMatrix& gram, const std::vector<int>& labels,
                         const SvmModel& model);

// one-vs-rest over string labels; one model per class in lexicographic order
std::vector<SvmModel> train_ovr(const GramMatrix& gram, const std::vector<std::string>& labels,
                                const TrainOptions& opt = {});

struct OvrClassifier {
  std::vector<SvmModel> models;
  std::vector<std::string> train_ids;
  std::vector<std::vector<std::size_t>> columns;  // per model, support -> column

  static OvrClassifier make(std::vector<SvmModel> models, std::vector<std::string> train_ids);
  std::vector<double> scores(const std::vector<double>& row) const;
  // argmax score; ties go to the lexicographically smallest label
  std::string predict_label(const std::vector<double>& row) const;
};

void save_model(const SvmModel& model, const std::string& path);
SvmModel load_model(const std::string& path);

}  // namespace mvdfq
