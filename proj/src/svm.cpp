#include "mvdfq/svm.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "mvdfq/error.hpp"
#include "mvdfq/textio.hpp"

namespace mvdfq {

namespace {

constexpr double kTau = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_labels(const GramMatrix& gram, const std::vector<int>& y) {
  if (gram.size() == 0) fail(Err::EmptyDataset, "empty gram matrix");
  if (y.size() != gram.size())
    fail(Err::LengthMismatch, std::to_string(y.size()) + " labels for " +
                                  std::to_string(gram.size()) + " gram rows");
  bool pos = false, neg = false;
  for (int v : y) {
    if (v == 1)
      pos = true;
    else if (v == -1)
      neg = true;
    else
      fail(Err::InvalidParams, "labels must be +1 or -1");
  }
  if (!pos || !neg) fail(Err::SingleClass, "training set contains a single class");
}

// m(alpha) - M(alpha): maximal violating pair gap, with the pair indices
struct Violation {
  double gap;
  long i = -1;
  long j = -1;
};

Violation find_pair(const std::vector<int>& y, const std::vector<double>& alpha,
                    const std::vector<double>& grad, double c) {
  double up = -kInf, low = kInf;
  Violation v{-kInf};
  const long n = static_cast<long>(y.size());
  for (long t = 0; t < n; ++t) {
    double score = -y[t] * grad[t];
    bool in_up = (y[t] == 1 && alpha[t] < c) || (y[t] == -1 && alpha[t] > 0.0);
    bool in_low = (y[t] == 1 && alpha[t] > 0.0) || (y[t] == -1 && alpha[t] < c);
    if (in_up && score > up) {
      up = score;
      v.i = t;
    }
    if (in_low && score < low) {
      low = score;
      v.j = t;
    }
  }
  v.gap = up - low;
  return v;
}

}  // namespace

SvmModel train_svm(const GramMatrix& gram, const std::vector<int>& y, const TrainOptions& opt) {
  check_labels(gram, y);
  if (!(opt.C > 0.0)) fail(Err::InvalidParams, "C must be positive");
  if (!(opt.tol > 0.0)) fail(Err::InvalidParams, "tol must be positive");
  const long n = static_cast<long>(gram.size());
  const double c = opt.C;
  const auto& k = gram.values;

  if (static_cast<std::size_t>(n) <= opt.psd_check_limit) {
    double mineig = min_eigenvalue(gram);
    if (mineig < -1e-6 * gram.trace())
      std::cerr << "warning: gram matrix is not positive semidefinite (min eigenvalue "
                << fmt_real(mineig) << "); training proceeds\n";
  }

  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n, -1.0);  // G_t = sum_j Q_tj alpha_j - 1
  long max_iter = opt.max_iter > 0 ? opt.max_iter : std::max(100000L, 1000L * n);

  long iter = 0;
  for (; iter < max_iter; ++iter) {
    Violation v = find_pair(y, alpha, grad, c);
    if (v.i < 0 || v.j < 0 || v.gap < opt.tol) break;
    const long i = v.i, j = v.j;

    double quad = k[i][i] + k[j][j] - 2.0 * k[i][j];
    if (quad <= 0.0) quad = kTau;
    double old_i = alpha[i], old_j = alpha[j];

    if (y[i] != y[j]) {
      double delta = (-grad[i] - grad[j]) / quad;
      double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0.0) {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = diff;
        }
      } else {
        if (alpha[i] < 0.0) {
          alpha[i] = 0.0;
          alpha[j] = -diff;
        }
      }
      if (diff > 0.0) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = c - diff;
        }
      } else {
        if (alpha[j] > c) {
          alpha[j] = c;
          alpha[i] = c + diff;
        }
      }
    } else {
      double delta = (grad[i] - grad[j]) / quad;
      double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > c) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = sum - c;
        }
      } else {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = sum;
        }
      }
      if (sum > c) {
        if (alpha[j] > c) {
          alpha[j] = c;
          alpha[i] = sum - c;
        }
      } else {
        if (alpha[i] < 0.0) {
          alpha[i] = 0.0;
          alpha[j] = sum;
        }
      }
    }

    double di = alpha[i] - old_i, dj = alpha[j] - old_j;
    for (long t = 0; t < n; ++t)
      grad[t] += y[t] * y[i] * k[t][i] * di + y[t] * y[j] * k[t][j] * dj;

    if (opt.objective_trace) {
      double obj = 0.0;
      for (long t = 0; t < n; ++t) obj += alpha[t] * (grad[t] - 1.0);
      opt.objective_trace->push_back(-0.5 * obj);
    }
  }
  if (iter == max_iter)
    std::cerr << "warning: svm reached the iteration limit (" << max_iter
              << ") before meeting tol\n";

  // rho: average y_t G_t over free points, else midpoint of the two bounds
  double ub = kInf, lb = -kInf, sum_free = 0.0;
  long nr_free = 0;
  for (long t = 0; t < n; ++t) {
    double yg = y[t] * grad[t];
    if (alpha[t] >= c) {
      if (y[t] == -1)
        ub = std::min(ub, yg);
      else
        lb = std::max(lb, yg);
    } else if (alpha[t] <= 0.0) {
      if (y[t] == 1)
        ub = std::min(ub, yg);
      else
        lb = std::max(lb, yg);
    } else {
      ++nr_free;
      sum_free += yg;
    }
  }
  double rho = nr_free > 0 ? sum_free / nr_free : 0.5 * (ub + lb);

  SvmModel model;
  model.C = c;
  model.bias = -rho;
  for (long t = 0; t < n; ++t) {
    if (alpha[t] <= 0.0) continue;
    model.support_ids.push_back(gram.ids[t]);
    model.alphas.push_back(y[t] * alpha[t]);
  }
  return model;
}

double decision(const SvmModel& model, const std::vector<double>& support_row) {
  if (support_row.size() != model.alphas.size())
    fail(Err::LengthMismatch, "kernel row has " + std::to_string(support_row.size()) +
                                  " entries, model has " + std::to_string(model.alphas.size()) +
                                  " support points");
  double s = model.bias;
  for (std::size_t i = 0; i < model.alphas.size(); ++i) s += model.alphas[i] * support_row[i];
  return s;
}

std::vector<std::size_t> support_columns(const SvmModel& model,
                                         const std::vector<std::string>& train_ids) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < train_ids.size(); ++i) index.emplace(train_ids[i], i);
  std::vector<std::size_t> cols;
  cols.reserve(model.support_ids.size());
  for (const auto& id : model.support_ids) {
    auto it = index.find(id);
    if (it == index.end())
      fail(Err::InvalidParams, "support id " + id + " missing from the training set");
    cols.push_back(it->second);
  }
  return cols;
}

std::pair<double, std::string> predict(const SvmModel& model, const std::vector<double>& row,
                                       const std::vector<std::string>& train_ids) {
  if (row.size() != train_ids.size())
    fail(Err::LengthMismatch, "kernel row has " + std::to_string(row.size()) + " entries for " +
                                  std::to_string(train_ids.size()) + " training ids");
  auto cols = support_columns(model, train_ids);
  double s = model.bias;
  for (std::size_t i = 0; i < cols.size(); ++i) s += model.alphas[i] * row[cols[i]];
  return {s, s >= 0.0 ? model.label_positive : model.label_negative};
}

double max_kkt_violation(const GramMatrix& gram, const std::vector<int>& y,
                         const SvmModel& model) {
  check_labels(gram, y);
  const long n = static_cast<long>(gram.size());
  auto cols = support_columns(model, gram.ids);
  std::vector<double> alpha(n, 0.0);
  for (std::size_t s = 0; s < cols.size(); ++s) alpha[cols[s]] = model.alphas[s] * y[cols[s]];
  std::vector<double> grad(n, -1.0);
  for (long t = 0; t < n; ++t)
    for (long j = 0; j < n; ++j) grad[t] += y[t] * y[j] * gram.values[t][j] * alpha[j];
  return find_pair(y, alpha, grad, model.C).gap;
}

std::vector<SvmModel> train_ovr(const GramMatrix& gram, const std::vector<std::string>& labels,
                                const TrainOptions& opt) {
  if (labels.size() != gram.size())
    fail(Err::LengthMismatch, std::to_string(labels.size()) + " labels for " +
                                  std::to_string(gram.size()) + " gram rows");
  std::vector<std::string> classes(labels);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (classes.size() < 2) fail(Err::SingleClass, "need at least two classes");

  std::vector<SvmModel> models;
  if (classes.size() == 2) {
    // one real model; the second is its exact negation so the two-class case
    // reduces to the plain binary classifier
    std::vector<int> y(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) y[i] = labels[i] == classes[0] ? 1 : -1;
    SvmModel m = train_svm(gram, y, opt);
    m.label_positive = classes[0];
    m.label_negative = classes[1];
    SvmModel neg = m;
    neg.label_positive = classes[1];
    neg.label_negative = classes[0];
    neg.bias = -m.bias;
    for (auto& a : neg.alphas) a = -a;
    models.push_back(std::move(m));
    models.push_back(std::move(neg));
    return models;
  }

  for (const auto& cls : classes) {
    std::vector<int> y(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) y[i] = labels[i] == cls ? 1 : -1;
    SvmModel m = train_svm(gram, y, opt);
    m.label_positive = cls;
    m.label_negative = "rest";
    models.push_back(std::move(m));
  }
  return models;
}

OvrClassifier OvrClassifier::make(std::vector<SvmModel> models,
                                  std::vector<std::string> train_ids) {
  OvrClassifier c;
  c.models = std::move(models);
  c.train_ids = std::move(train_ids);
  for (const auto& m : c.models) c.columns.push_back(support_columns(m, c.train_ids));
  return c;
}

std::vector<double> OvrClassifier::scores(const std::vector<double>& row) const {
  if (row.size() != train_ids.size())
    fail(Err::LengthMismatch, "kernel row has " + std::to_string(row.size()) + " entries for " +
                                  std::to_string(train_ids.size()) + " training ids");
  std::vector<double> out;
  out.reserve(models.size());
  for (std::size_t m = 0; m < models.size(); ++m) {
    double s = models[m].bias;
    for (std::size_t i = 0; i < columns[m].size(); ++i)
      s += models[m].alphas[i] * row[columns[m][i]];
    out.push_back(s);
  }
  return out;
}

std::string OvrClassifier::predict_label(const std::vector<double>& row) const {
  auto s = scores(row);
  std::size_t best = 0;
  for (std::size_t m = 1; m < s.size(); ++m) {
    if (s[m] > s[best] ||
        (s[m] == s[best] && models[m].label_positive < models[best].label_positive))
      best = m;
  }
  return models[best].label_positive;
}

void save_model(const SvmModel& model, const std::string& path) {
  std::ostringstream out;
  out << "svm v1 C=" << fmt_real(model.C) << " bias=" << fmt_real(model.bias)
      << " pos=" << model.label_positive << " neg=" << model.label_negative << "\n";
  for (std::size_t i = 0; i < model.support_ids.size(); ++i)
    out << model.support_ids[i] << ' ' << fmt_real(model.alphas[i]) << "\n";
  write_file(path, out.str());
}

SvmModel load_model(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty()) fail(Err::MalformedFile, path + ": empty file");
  auto head = split(lines[0], ' ');
  if (head.size() != 6 || head[0] != "svm" || head[1] != "v1" || head[2].rfind("C=", 0) != 0 ||
      head[3].rfind("bias=", 0) != 0 || head[4].rfind("pos=", 0) != 0 ||
      head[5].rfind("neg=", 0) != 0)
    fail(Err::MalformedFile, path + ": bad header '" + lines[0] + "'");
  SvmModel model;
  model.C = parse_real(head[2].substr(2), path);
  model.bias = parse_real(head[3].substr(5), path);
  model.label_positive = head[4].substr(4);
  model.label_negative = head[5].substr(4);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::string where = path + ":" + std::to_string(i + 1);
    auto toks = split(lines[i], ' ');
    if (toks.size() != 2) fail(Err::MalformedFile, where + ": expected '<id> <alpha>'");
    model.support_ids.push_back(toks[0]);
    model.alphas.push_back(parse_real(toks[1], where));
  }
  return model;
}

}  // namespace mvdfq
