#include "mvdfq/gram.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mvdfq/error.hpp"
#include "mvdfq/textio.hpp"

namespace mvdfq {

namespace {

void check_dataset(const std::vector<DiscreteSequence>& data, const KernelSpec& spec) {
  validate_spec(spec);
  std::set<std::string> seen;
  for (const auto& s : data) {
    if (!seen.insert(s.id).second) fail(Err::DuplicateId, "duplicate sequence id " + s.id);
    if (s.dims() != data[0].dims())
      fail(Err::DimensionMismatch, "sequence " + s.id + " has R=" + std::to_string(s.dims()) +
                                       ", expected " + std::to_string(data[0].dims()));
    if (s.alphabet_size != spec.alphabet_size || s.alphabet_min != spec.alphabet_min)
      fail(Err::AlphabetMismatch, "sequence " + s.id + " alphabet differs from kernel spec");
  }
}

// parallel per-sequence feature extraction; errors are collected per index and
// the lowest-index one is rethrown so failures are deterministic
std::vector<std::vector<FeatureVector>> all_features(const std::vector<DiscreteSequence>& data,
                                                     const KernelSpec& spec) {
  const long n = static_cast<long>(data.size());
  std::vector<std::vector<FeatureVector>> feats(n);
  std::vector<std::exception_ptr> errs(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      feats[i] = sequence_features(data[i], spec);
    } catch (...) {
      errs[i] = std::current_exception();
    }
  }
  for (long i = 0; i < n; ++i)
    if (errs[i]) std::rethrow_exception(errs[i]);
  return feats;
}

double normalized(double k, double kx, double ky) {
  if (kx == 0.0 || ky == 0.0) return 0.0;
  return k / std::sqrt(kx * ky);
}

}  // namespace

double GramMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < size(); ++i) t += values[i][i];
  return t;
}

GramMatrix compute_gram(const std::vector<DiscreteSequence>& data, const KernelSpec& spec) {
  check_dataset(data, spec);
  const long n = static_cast<long>(data.size());
  auto feats = all_features(data, spec);

  GramMatrix g;
  g.ids.reserve(n);
  for (const auto& s : data) g.ids.push_back(s.id);
  g.values.assign(n, std::vector<double>(n, 0.0));

  std::vector<double> diag(n);
  for (long i = 0; i < n; ++i) diag[i] = features_dot(feats[i], feats[i]);

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      double v = (i == j) ? diag[i] : features_dot(feats[i], feats[j]);
      if (spec.cosine_normalize) v = normalized(v, diag[i], diag[j]);
      g.values[i][j] = v;
      g.values[j][i] = v;
    }
  }
  return g;
}

GramMatrix compute_gram_reference(const std::vector<DiscreteSequence>& data,
                                  const KernelSpec& spec) {
  check_dataset(data, spec);
  const std::size_t n = data.size();
  GramMatrix g;
  g.ids.reserve(n);
  for (const auto& s : data) g.ids.push_back(s.id);
  g.values.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double v = mvdfq_kernel(data[i], data[j], spec);
      g.values[i][j] = v;
      g.values[j][i] = v;
    }
  return g;
}

CrossGram compute_cross_gram(const std::vector<DiscreteSequence>& test,
                             const std::vector<DiscreteSequence>& train, const KernelSpec& spec) {
  check_dataset(train, spec);
  if (!test.empty()) {
    check_dataset(test, spec);
    if (!train.empty() && test[0].dims() != train[0].dims())
      fail(Err::DimensionMismatch, "test R=" + std::to_string(test[0].dims()) +
                                       " vs train R=" + std::to_string(train[0].dims()));
  }
  auto ftest = all_features(test, spec);
  auto ftrain = all_features(train, spec);

  CrossGram cg;
  for (const auto& s : test) cg.test_ids.push_back(s.id);
  for (const auto& s : train) cg.train_ids.push_back(s.id);
  cg.values.assign(test.size(), std::vector<double>(train.size(), 0.0));

  std::vector<double> dtest(test.size()), dtrain(train.size());
  for (std::size_t i = 0; i < test.size(); ++i) dtest[i] = features_dot(ftest[i], ftest[i]);
  for (std::size_t j = 0; j < train.size(); ++j) dtrain[j] = features_dot(ftrain[j], ftrain[j]);

  const long nt = static_cast<long>(test.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < train.size(); ++j) {
      double v = features_dot(ftest[i], ftrain[j]);
      if (spec.cosine_normalize) v = normalized(v, dtest[i], dtrain[j]);
      cg.values[i][j] = v;
    }
  }
  return cg;
}

double min_eigenvalue(const GramMatrix& gram) {
  const std::size_t n = gram.size();
  if (n == 0) fail(Err::EmptyDataset, "empty gram matrix");
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(gram.values[i][j]))
        fail(Err::NaNOrInf, "non-finite gram entry at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      m(i, j) = gram.values[i][j];
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void save_gram(const GramMatrix& gram, const std::string& path) {
  std::ostringstream out;
  out << "gram v1 N=" << gram.size() << "\n";
  for (std::size_t i = 0; i < gram.size(); ++i) out << (i ? "\t" : "") << gram.ids[i];
  out << "\n";
  for (const auto& row : gram.values) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "\t" : "") << fmt_real(row[j]);
    out << "\n";
  }
  write_file(path, out.str());
}

GramMatrix load_gram(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty()) fail(Err::MalformedFile, path + ": empty file");
  auto head = split(lines[0], ' ');
  if (head.size() != 3 || head[0] != "gram" || head[1] != "v1" || head[2].rfind("N=", 0) != 0)
    fail(Err::MalformedFile, path + ": bad header '" + lines[0] + "'");
  long n = parse_int(head[2].substr(2), path);
  if (n < 0) fail(Err::MalformedFile, path + ": bad N");
  if (lines.size() < static_cast<std::size_t>(n) + 2)
    fail(Err::MalformedFile, path + ": expected " + std::to_string(n) + " rows");

  GramMatrix g;
  if (!lines[1].empty()) g.ids = split(lines[1], '\t');
  if (g.ids.size() != static_cast<std::size_t>(n))
    fail(Err::MalformedFile, path + ": id count " + std::to_string(g.ids.size()) +
                                 " does not match N=" + std::to_string(n));
  g.values.resize(n);
  for (long i = 0; i < n; ++i) {
    std::string where = path + ":" + std::to_string(i + 3);
    auto toks = split(lines[i + 2], '\t');
    if (toks.size() != static_cast<std::size_t>(n))
      fail(Err::MalformedFile, where + ": expected " + std::to_string(n) + " values");
    g.values[i].reserve(n);
    for (const auto& t : toks) g.values[i].push_back(parse_real(t, where));
  }
  return g;
}

void save_cross_gram(const CrossGram& cg, const std::string& path) {
  std::ostringstream out;
  out << "cross-gram v1 NTEST=" << cg.test_ids.size() << " NTRAIN=" << cg.train_ids.size()
      << "\n";
  for (std::size_t i = 0; i < cg.test_ids.size(); ++i) out << (i ? "\t" : "") << cg.test_ids[i];
  out << "\n";
  for (std::size_t j = 0; j < cg.train_ids.size(); ++j) out << (j ? "\t" : "") << cg.train_ids[j];
  out << "\n";
  for (const auto& row : cg.values) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "\t" : "") << fmt_real(row[j]);
    out << "\n";
  }
  write_file(path, out.str());
}

CrossGram load_cross_gram(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.size() < 3) fail(Err::MalformedFile, path + ": truncated file");
  auto head = split(lines[0], ' ');
  if (head.size() != 4 || head[0] != "cross-gram" || head[1] != "v1" ||
      head[2].rfind("NTEST=", 0) != 0 || head[3].rfind("NTRAIN=", 0) != 0)
    fail(Err::MalformedFile, path + ": bad header '" + lines[0] + "'");
  long ntest = parse_int(head[2].substr(6), path);
  long ntrain = parse_int(head[3].substr(7), path);
  if (ntest < 0 || ntrain < 0) fail(Err::MalformedFile, path + ": bad counts");
  if (lines.size() < static_cast<std::size_t>(ntest) + 3)
    fail(Err::MalformedFile, path + ": expected " + std::to_string(ntest) + " rows");

  CrossGram cg;
  if (!lines[1].empty()) cg.test_ids = split(lines[1], '\t');
  if (!lines[2].empty()) cg.train_ids = split(lines[2], '\t');
  if (cg.test_ids.size() != static_cast<std::size_t>(ntest) ||
      cg.train_ids.size() != static_cast<std::size_t>(ntrain))
    fail(Err::MalformedFile, path + ": id counts do not match header");
  cg.values.resize(ntest);
  for (long i = 0; i < ntest; ++i) {
    std::string where = path + ":" + std::to_string(i + 4);
    auto toks = split(lines[i + 3], '\t');
    if (toks.size() != static_cast<std::size_t>(ntrain))
      fail(Err::MalformedFile, where + ": expected " + std::to_string(ntrain) + " values");
    cg.values[i].reserve(ntrain);
    for (const auto& t : toks) cg.values[i].push_back(parse_real(t, where));
  }
  return cg;
}

}  // namespace mvdfq
