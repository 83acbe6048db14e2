#include "mvdfq/metrics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mvdfq/error.hpp"

namespace mvdfq {

EvalReport evaluate(const std::vector<std::string>& predicted,
                    const std::vector<std::string>& truth) {
  if (predicted.size() != truth.size())
    fail(Err::LengthMismatch, std::to_string(predicted.size()) + " predictions for " +
                                  std::to_string(truth.size()) + " truths");
  if (truth.empty()) fail(Err::EmptyInput, "nothing to evaluate");

  std::set<std::string> all(truth.begin(), truth.end());
  std::set<std::string> truth_classes = all;
  all.insert(predicted.begin(), predicted.end());

  EvalReport rep;
  rep.classes.assign(all.begin(), all.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < rep.classes.size(); ++i) index[rep.classes[i]] = i;

  rep.confusion.assign(rep.classes.size(), std::vector<long>(rep.classes.size(), 0));
  long wrong = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    ++rep.confusion[index[truth[i]]][index[predicted[i]]];
    if (predicted[i] != truth[i]) ++wrong;
  }
  rep.error_rate = static_cast<double>(wrong) / truth.size();

  double f1_sum = 0.0;
  for (const auto& cls : truth_classes) {
    std::size_t c = index[cls];
    long tp = rep.confusion[c][c];
    long fp = 0, fn = 0;
    for (std::size_t o = 0; o < rep.classes.size(); ++o) {
      if (o == c) continue;
      fp += rep.confusion[o][c];
      fn += rep.confusion[c][o];
    }
    double prec = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
    double rec = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
    double f1 = prec + rec > 0.0 ? 2.0 * prec * rec / (prec + rec) : 0.0;
    rep.per_class_f1.emplace_back(cls, f1);
    f1_sum += f1;
  }
  rep.macro_f1 = f1_sum / truth_classes.size();
  return rep;
}

double roc50(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    fail(Err::LengthMismatch, std::to_string(scores.size()) + " scores for " +
                                  std::to_string(labels.size()) + " labels");
  long npos = 0, nneg = 0;
  for (int l : labels) {
    if (l == 1)
      ++npos;
    else if (l == -1)
      ++nneg;
    else
      fail(Err::InvalidParams, "labels must be +1 or -1");
  }
  if (npos == 0 || nneg == 0) fail(Err::SingleClass, "roc50 needs both classes");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return labels[a] < labels[b];  // ties: negatives first
  });

  const long fp_cap = std::min<long>(50, nneg);
  long tp = 0, fp = 0;
  double area = 0.0;
  for (std::size_t idx : order) {
    if (labels[idx] == 1) {
      ++tp;
      continue;
    }
    area += tp;
    if (++fp == fp_cap) break;
  }
  return area / (static_cast<double>(fp_cap) * npos);
}

}  // namespace mvdfq
