#include "mvdfq/cv.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mvdfq/error.hpp"
#include "mvdfq/gram.hpp"
#include "mvdfq/rng.hpp"

namespace mvdfq {

FoldPlan make_stratified_folds(const std::vector<Sequence>& data, int folds, std::uint64_t seed) {
  if (folds < 2) fail(Err::InvalidParams, "folds must be >= 2");
  if (data.empty()) fail(Err::EmptyDataset, "no sequences to split");

  std::map<std::string, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < data.size(); ++i) by_class[data[i].label].push_back(i);

  FoldPlan plan;
  plan.folds = folds;
  plan.assignment.assign(data.size(), 0);
  std::size_t class_index = 0;
  for (auto& [label, members] : by_class) {
    if (members.size() < static_cast<std::size_t>(folds))
      fail(Err::TooFewPerClass, "class " + label + " has " + std::to_string(members.size()) +
                                    " members for " + std::to_string(folds) + " folds");
    Rng rng(derive_seed(seed, "folds", class_index++));
    rng.shuffle(members);
    for (std::size_t i = 0; i < members.size(); ++i)
      plan.assignment[members[i]] = static_cast<int>(i % folds);
  }
  return plan;
}

FoldPlan make_group_folds(const std::vector<Sequence>& data, int folds, std::uint64_t seed) {
  if (folds < 2) fail(Err::InvalidParams, "folds must be >= 2");
  if (data.empty()) fail(Err::EmptyDataset, "no sequences to split");

  std::set<std::string> keys;
  for (const auto& s : data) {
    if (s.group.empty())
      fail(Err::UnknownGroupKey, "sequence " + s.id + " has no group key");
    keys.insert(s.group);
  }
  if (keys.size() < static_cast<std::size_t>(folds))
    fail(Err::InvalidParams, std::to_string(keys.size()) + " groups for " +
                                 std::to_string(folds) + " folds");

  std::vector<std::string> order(keys.begin(), keys.end());
  Rng rng(derive_seed(seed, "group-folds"));
  rng.shuffle(order);
  std::map<std::string, int> fold_of;
  for (std::size_t i = 0; i < order.size(); ++i)
    fold_of[order[i]] = static_cast<int>(i % folds);

  FoldPlan plan;
  plan.folds = folds;
  plan.assignment.reserve(data.size());
  for (const auto& s : data) plan.assignment.push_back(fold_of[s.group]);
  return plan;
}

KernelSpec resolve_kernel(const PipelineConfig& config) {
  KernelSpec spec = config.kernel;
  if (config.quantizer == PipelineConfig::Quantizer::vq) {
    spec.alphabet_size = static_cast<Symbol>(config.codebook_size);
    spec.alphabet_min = 1;
  } else {
    spec.alphabet_size = static_cast<Symbol>(config.bins) + 2;
    spec.alphabet_min = 0;
  }
  validate_spec(spec);
  return spec;
}

std::vector<DiscreteSequence> discretize_all(const std::vector<Sequence>& data,
                                             const QuantizerModel* quantizer,
                                             const Codebook* codebook) {
  std::vector<DiscreteSequence> out;
  out.reserve(data.size());
  for (const auto& s : data)
    out.push_back(quantizer ? apply_dfq(*quantizer, s) : apply_vq(*codebook, s));
  return out;
}

FoldResult run_fold(const std::vector<Sequence>& data, const FoldPlan& plan, int fold,
                    const PipelineConfig& config, std::uint64_t seed) {
  if (plan.assignment.size() != data.size())
    fail(Err::LengthMismatch, "fold plan does not match the dataset");
  if (fold < 0 || fold >= plan.folds) fail(Err::InvalidParams, "fold index out of range");

  std::vector<Sequence> train, test;
  FoldResult result;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (plan.assignment[i] == fold) {
      test.push_back(data[i]);
      result.test_indices.push_back(i);
    } else {
      train.push_back(data[i]);
    }
  }
  if (train.empty() || test.empty())
    fail(Err::InvalidParams, "fold " + std::to_string(fold) + " leaves an empty split");

  std::uint64_t fit_seed = derive_seed(seed, "quantizer", fold);
  QuantizerModel quantizer;
  Codebook codebook;
  const QuantizerModel* qp = nullptr;
  const Codebook* cp = nullptr;
  switch (config.quantizer) {
    case PipelineConfig::Quantizer::uniform:
      quantizer = fit_uniform_quantizer(train, config.bins);
      qp = &quantizer;
      break;
    case PipelineConfig::Quantizer::kmeans:
      quantizer = fit_kmeans_quantizer(train, config.bins, config.fit_iters, fit_seed);
      qp = &quantizer;
      break;
    case PipelineConfig::Quantizer::vq:
      codebook = fit_vq_codebook(train, config.codebook_size, config.fit_iters, fit_seed);
      cp = &codebook;
      break;
  }

  KernelSpec spec = resolve_kernel(config);
  auto dtrain = discretize_all(train, qp, cp);
  auto dtest = discretize_all(test, qp, cp);

  GramMatrix gram = compute_gram(dtrain, spec);
  std::vector<std::string> train_labels;
  train_labels.reserve(train.size());
  for (const auto& s : train) train_labels.push_back(s.label);

  TrainOptions opt;
  opt.C = config.C;
  opt.tol = config.tol;
  result.models = train_ovr(gram, train_labels, opt);

  CrossGram cg = compute_cross_gram(dtest, dtrain, spec);
  OvrClassifier clf = OvrClassifier::make(result.models, gram.ids);
  for (std::size_t i = 0; i < dtest.size(); ++i) {
    result.predicted.push_back(clf.predict_label(cg.values[i]));
    result.binary_scores.push_back(clf.scores(cg.values[i])[0]);
  }
  return result;
}

EvalReport cross_validate(const std::vector<Sequence>& data, const PipelineConfig& config,
                          int folds, std::uint64_t seed, bool group_mode,
                          std::vector<FoldResult>* fold_results) {
  FoldPlan plan = group_mode ? make_group_folds(data, folds, seed)
                             : make_stratified_folds(data, folds, seed);

  std::vector<std::string> predicted(data.size());
  std::vector<double> first_scores(data.size());
  for (int f = 0; f < folds; ++f) {
    FoldResult r = run_fold(data, plan, f, config, seed);
    for (std::size_t i = 0; i < r.test_indices.size(); ++i) {
      predicted[r.test_indices[i]] = r.predicted[i];
      first_scores[r.test_indices[i]] = r.binary_scores[i];
    }
    if (fold_results) fold_results->push_back(std::move(r));
  }

  std::vector<std::string> truth;
  truth.reserve(data.size());
  for (const auto& s : data) truth.push_back(s.label);
  EvalReport rep = evaluate(predicted, truth);

  std::set<std::string> classes(truth.begin(), truth.end());
  if (classes.size() == 2) {
    // positive class = lexicographically smallest = the first OVR model,
    // whose decision scores were collected per fold
    const std::string& pos = *classes.begin();
    std::vector<int> y;
    y.reserve(truth.size());
    for (const auto& t : truth) y.push_back(t == pos ? 1 : -1);
    rep.roc50 = roc50(first_scores, y);
  }
  return rep;
}

}  // namespace mvdfq
