#include "mvdfq/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "mvdfq/error.hpp"
#include "mvdfq/rng.hpp"
#include "mvdfq/textio.hpp"

namespace mvdfq {

namespace {

std::size_t checked_dims(const std::vector<Sequence>& data) {
  if (data.empty()) fail(Err::EmptyDataset, "no sequences");
  std::size_t r = data[0].dims();
  for (const auto& s : data)
    if (s.dims() != r)
      fail(Err::DimensionMismatch, "sequence " + s.id + " has R=" + std::to_string(s.dims()) +
                                       ", expected " + std::to_string(r));
  if (r == 0) fail(Err::EmptyDataset, "sequences have zero dimensions");
  return r;
}

}  // namespace

QuantizerModel fit_uniform_quantizer(const std::vector<Sequence>& data, int bins) {
  if (bins < 1) fail(Err::InvalidParams, "bins must be >= 1");
  std::size_t r_count = checked_dims(data);

  QuantizerModel model;
  model.kind = QuantizerModel::Kind::uniform;
  model.bins = bins;
  model.dims.resize(r_count);

  for (std::size_t r = 0; r < r_count; ++r) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    std::size_t seen = 0;
    for (const auto& s : data) {
      for (double v : s.values[r]) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        ++seen;
      }
    }
    if (seen == 0) fail(Err::EmptyDataset, "no observations in dimension " + std::to_string(r));
    if (!(hi > lo))
      fail(Err::ConstantDimension,
           "dimension " + std::to_string(r) + " is constant at " + fmt_real(lo));
    model.dims[r].f_min = lo;
    model.dims[r].f_max = hi;
    model.dims[r].delta = (hi - lo) / bins;
  }
  return model;
}

std::vector<double> kmeans_1d(const std::vector<double>& values, int k, int max_iter,
                              std::uint64_t seed) {
  if (k < 1) fail(Err::InvalidParams, "k must be >= 1");
  const std::size_t n = values.size();
  if (n == 0) fail(Err::EmptyDataset, "kmeans_1d on empty input");

  Rng rng(seed);
  std::vector<double> centers;
  centers.reserve(k);

  // k-means++ seeding on scalars
  centers.push_back(values[rng.below(n)]);
  std::vector<double> mindist(n);
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (double ctr : centers) {
        double d = values[i] - ctr;
        best = std::min(best, d * d);
      }
      mindist[i] = best;
      total += best;
    }
    if (total <= 0.0) {
      centers.push_back(values[rng.below(n)]);
      continue;
    }
    double u = rng.next_double() * total;
    double cum = 0.0;
    std::size_t pick = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
      cum += mindist[i];
      if (cum > u) {
        pick = i;
        break;
      }
    }
    centers.push_back(values[pick]);
  }

  std::vector<int> assign(n, -1);
  std::vector<int> prev(n, -2);
  for (int iter = 0; iter < max_iter && assign != prev; ++iter) {
    prev = assign;
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double bestd = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        double d = values[i] - centers[c];
        d *= d;
        if (d < bestd) {
          bestd = d;
          best = c;
        }
      }
      assign[i] = best;
    }
    std::vector<double> sum(k, 0.0);
    std::vector<long> cnt(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      sum[assign[i]] += values[i];
      ++cnt[assign[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (cnt[c] > 0) {
        centers[c] = sum[c] / cnt[c];
        continue;
      }
      // empty cluster: move it onto the point farthest from its own center
      std::size_t far = 0;
      double fard = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        double d = values[i] - centers[assign[i]];
        d *= d;
        if (d > fard) {
          fard = d;
          far = i;
        }
      }
      centers[c] = values[far];
      assign[far] = c;
    }
  }

  std::sort(centers.begin(), centers.end());
  return centers;
}

QuantizerModel fit_kmeans_quantizer(const std::vector<Sequence>& data, int bins, int max_iter,
                                    std::uint64_t seed) {
  if (bins < 1) fail(Err::InvalidParams, "bins must be >= 1");
  if (max_iter < 1) fail(Err::InvalidParams, "max_iter must be >= 1");
  std::size_t r_count = checked_dims(data);

  QuantizerModel model;
  model.kind = QuantizerModel::Kind::kmeans1d;
  model.bins = bins;
  model.dims.resize(r_count);

  for (std::size_t r = 0; r < r_count; ++r) {
    std::vector<double> pooled;
    for (const auto& s : data) pooled.insert(pooled.end(), s.values[r].begin(), s.values[r].end());
    if (pooled.empty())
      fail(Err::EmptyDataset, "no observations in dimension " + std::to_string(r));

    std::set<double> distinct(pooled.begin(), pooled.end());
    if (distinct.size() < static_cast<std::size_t>(bins))
      fail(Err::TooFewDistinctValues, "dimension " + std::to_string(r) + " has " +
                                          std::to_string(distinct.size()) +
                                          " distinct values, need >= " + std::to_string(bins));

    auto centers = kmeans_1d(pooled, bins, max_iter, derive_seed(seed, "kmeans1d", r));
    auto& dim = model.dims[r];
    dim.f_min = *distinct.begin();
    dim.f_max = *distinct.rbegin();
    dim.cuts.reserve(bins - 1);
    for (int c = 0; c + 1 < bins; ++c) dim.cuts.push_back(0.5 * (centers[c] + centers[c + 1]));
    for (std::size_t c = 1; c < dim.cuts.size(); ++c)
      if (!(dim.cuts[c] > dim.cuts[c - 1]))
        fail(Err::TooFewDistinctValues,
             "dimension " + std::to_string(r) + ": k-means centers collapsed");
  }
  return model;
}

Symbol quantize_value(const QuantizerModel& model, std::size_t dim, double f) {
  const auto& d = model.dims.at(dim);
  if (f < d.f_min) return 0;
  if (f > d.f_max) return static_cast<Symbol>(model.bins) + 1;
  if (model.kind == QuantizerModel::Kind::uniform) {
    long q = static_cast<long>(std::floor((f - d.f_min) / d.delta));
    if (q >= model.bins) q = model.bins - 1;  // f at (or rounding onto) the top edge
    if (q < 0) q = 0;
    return static_cast<Symbol>(q) + 1;
  }
  // kmeans1d: bin index = number of cut points strictly below f
  std::size_t below =
      std::lower_bound(d.cuts.begin(), d.cuts.end(), f) - d.cuts.begin();
  return static_cast<Symbol>(below) + 1;
}

DiscreteSequence apply_dfq(const QuantizerModel& model, const Sequence& x) {
  if (x.dims() != model.dims.size())
    fail(Err::DimensionMismatch, "sequence " + x.id + " has R=" + std::to_string(x.dims()) +
                                     ", quantizer expects " + std::to_string(model.dims.size()));
  DiscreteSequence out;
  out.id = x.id;
  out.label = x.label;
  out.group = x.group;
  out.alphabet_size = model.alphabet_size();
  out.alphabet_min = 0;
  out.rows.resize(x.dims());
  for (std::size_t r = 0; r < x.dims(); ++r) {
    out.rows[r].reserve(x.values[r].size());
    for (double v : x.values[r]) out.rows[r].push_back(quantize_value(model, r, v));
  }
  return out;
}

Codebook fit_vq_codebook(const std::vector<Sequence>& data, int codewords, int max_iter,
                         std::uint64_t seed) {
  if (codewords < 1) fail(Err::InvalidParams, "codewords must be >= 1");
  if (max_iter < 1) fail(Err::InvalidParams, "max_iter must be >= 1");
  std::size_t r_count = checked_dims(data);

  // pool all column vectors
  std::vector<std::vector<double>> points;
  for (const auto& s : data)
    for (std::size_t i = 0; i < s.length(); ++i) {
      std::vector<double> col(r_count);
      for (std::size_t r = 0; r < r_count; ++r) col[r] = s.values[r][i];
      points.push_back(std::move(col));
    }
  const std::size_t n = points.size();
  if (n < static_cast<std::size_t>(codewords))
    fail(Err::TooFewSamples,
         std::to_string(n) + " positions for " + std::to_string(codewords) + " codewords");

  auto dist2 = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
      double d = a[r] - b[r];
      s += d * d;
    }
    return s;
  };

  Rng rng(derive_seed(seed, "vq", 0));
  Codebook cb;
  cb.centroids.reserve(codewords);
  cb.centroids.push_back(points[rng.below(n)]);
  std::vector<double> mindist(n, std::numeric_limits<double>::infinity());
  for (int c = 1; c < codewords; ++c) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mindist[i] = std::min(mindist[i], dist2(points[i], cb.centroids.back()));
      total += mindist[i];
    }
    if (total <= 0.0) {
      cb.centroids.push_back(points[rng.below(n)]);
      continue;
    }
    double u = rng.next_double() * total;
    double cum = 0.0;
    std::size_t pick = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
      cum += mindist[i];
      if (cum > u) {
        pick = i;
        break;
      }
    }
    cb.centroids.push_back(points[pick]);
  }

  const int k = codewords;
  std::vector<int> assign(n, -1);
  std::vector<int> prev(n, -2);
  for (int iter = 0; iter < max_iter && assign != prev; ++iter) {
    prev = assign;
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double bestd = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        double d = dist2(points[i], cb.centroids[c]);
        if (d < bestd) {
          bestd = d;
          best = c;
        }
      }
      assign[i] = best;
    }
    std::vector<std::vector<double>> sum(k, std::vector<double>(r_count, 0.0));
    std::vector<long> cnt(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < r_count; ++r) sum[assign[i]][r] += points[i][r];
      ++cnt[assign[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (cnt[c] > 0) {
        for (std::size_t r = 0; r < r_count; ++r) cb.centroids[c][r] = sum[c][r] / cnt[c];
        continue;
      }
      std::size_t far = 0;
      double fard = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        double d = dist2(points[i], cb.centroids[assign[i]]);
        if (d > fard) {
          fard = d;
          far = i;
        }
      }
      cb.centroids[c] = points[far];
      assign[far] = c;
    }
  }
  return cb;
}

DiscreteSequence apply_vq(const Codebook& cb, const Sequence& x) {
  if (cb.size() == 0) fail(Err::InvalidParams, "empty codebook");
  if (x.dims() != cb.dims())
    fail(Err::DimensionMismatch, "sequence " + x.id + " has R=" + std::to_string(x.dims()) +
                                     ", codebook expects " + std::to_string(cb.dims()));
  DiscreteSequence out;
  out.id = x.id;
  out.label = x.label;
  out.group = x.group;
  out.alphabet_size = static_cast<Symbol>(cb.size());
  out.alphabet_min = 1;
  out.rows.resize(1);
  out.rows[0].reserve(x.length());
  for (std::size_t i = 0; i < x.length(); ++i) {
    std::size_t best = 0;
    double bestd = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < cb.size(); ++c) {
      double s = 0.0;
      for (std::size_t r = 0; r < cb.dims(); ++r) {
        double d = x.values[r][i] - cb.centroids[c][r];
        s += d * d;
      }
      if (s < bestd) {
        bestd = s;
        best = c;
      }
    }
    out.rows[0].push_back(static_cast<Symbol>(best) + 1);
  }
  return out;
}

void save_quantizer(const QuantizerModel& model, const std::string& path) {
  std::ostringstream out;
  out << "dfq-quantizer v1 kind="
      << (model.kind == QuantizerModel::Kind::uniform ? "uniform" : "kmeans1d")
      << " R=" << model.dims.size() << " B=" << model.bins << "\n";
  for (std::size_t r = 0; r < model.dims.size(); ++r) {
    const auto& d = model.dims[r];
    out << "dim " << r << " min " << fmt_real(d.f_min) << " max " << fmt_real(d.f_max);
    if (model.kind == QuantizerModel::Kind::kmeans1d) {
      out << " cuts";
      for (double c : d.cuts) out << ' ' << fmt_real(c);
    }
    out << "\n";
  }
  write_file(path, out.str());
}

QuantizerModel load_quantizer(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty()) fail(Err::MalformedFile, path + ": empty file");
  auto head = split(lines[0], ' ');
  if (head.size() != 5 || head[0] != "dfq-quantizer" || head[1] != "v1" ||
      head[2].rfind("kind=", 0) != 0 || head[3].rfind("R=", 0) != 0 ||
      head[4].rfind("B=", 0) != 0)
    fail(Err::MalformedFile, path + ": bad header '" + lines[0] + "'");

  QuantizerModel model;
  std::string kind = head[2].substr(5);
  if (kind == "uniform")
    model.kind = QuantizerModel::Kind::uniform;
  else if (kind == "kmeans1d")
    model.kind = QuantizerModel::Kind::kmeans1d;
  else
    fail(Err::MalformedFile, path + ": unknown kind '" + kind + "'");

  long r_count = parse_int(head[3].substr(2), path);
  model.bins = static_cast<int>(parse_int(head[4].substr(2), path));
  if (r_count < 1 || model.bins < 1) fail(Err::MalformedFile, path + ": bad R or B");
  if (lines.size() < static_cast<std::size_t>(r_count) + 1)
    fail(Err::MalformedFile, path + ": expected " + std::to_string(r_count) + " dim lines");

  model.dims.resize(r_count);
  for (long r = 0; r < r_count; ++r) {
    auto toks = split(lines[r + 1], ' ');
    std::string where = path + ":" + std::to_string(r + 2);
    if (toks.size() < 6 || toks[0] != "dim" || toks[2] != "min" || toks[4] != "max")
      fail(Err::MalformedFile, where + ": bad dim line");
    if (parse_int(toks[1], where) != r) fail(Err::MalformedFile, where + ": dim index mismatch");
    auto& d = model.dims[r];
    d.f_min = parse_real(toks[3], where);
    d.f_max = parse_real(toks[5], where);
    if (model.kind == QuantizerModel::Kind::uniform) {
      if (toks.size() != 6) fail(Err::MalformedFile, where + ": trailing tokens");
      if (!(d.f_max > d.f_min)) fail(Err::MalformedFile, where + ": max <= min");
      d.delta = (d.f_max - d.f_min) / model.bins;
    } else {
      if (toks.size() != 7 + static_cast<std::size_t>(model.bins - 1) || toks[6] != "cuts")
        fail(Err::MalformedFile, where + ": expected " + std::to_string(model.bins - 1) + " cuts");
      for (std::size_t i = 7; i < toks.size(); ++i) d.cuts.push_back(parse_real(toks[i], where));
      for (std::size_t i = 1; i < d.cuts.size(); ++i)
        if (!(d.cuts[i] > d.cuts[i - 1])) fail(Err::MalformedFile, where + ": cuts not increasing");
    }
  }
  return model;
}

void save_codebook(const Codebook& cb, const std::string& path) {
  std::ostringstream out;
  out << "vq-codebook v1 R=" << cb.dims() << " D=" << cb.size() << "\n";
  for (const auto& c : cb.centroids) {
    for (std::size_t r = 0; r < c.size(); ++r) out << (r ? " " : "") << fmt_real(c[r]);
    out << "\n";
  }
  write_file(path, out.str());
}

Codebook load_codebook(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty()) fail(Err::MalformedFile, path + ": empty file");
  auto head = split(lines[0], ' ');
  if (head.size() != 4 || head[0] != "vq-codebook" || head[1] != "v1" ||
      head[2].rfind("R=", 0) != 0 || head[3].rfind("D=", 0) != 0)
    fail(Err::MalformedFile, path + ": bad header '" + lines[0] + "'");
  long r_count = parse_int(head[2].substr(2), path);
  long d_count = parse_int(head[3].substr(2), path);
  if (r_count < 1 || d_count < 1) fail(Err::MalformedFile, path + ": bad R or D");
  if (lines.size() < static_cast<std::size_t>(d_count) + 1)
    fail(Err::MalformedFile, path + ": expected " + std::to_string(d_count) + " centroid lines");
  Codebook cb;
  cb.centroids.resize(d_count);
  for (long c = 0; c < d_count; ++c) {
    std::string where = path + ":" + std::to_string(c + 2);
    auto toks = split(lines[c + 1], ' ');
    if (toks.size() != static_cast<std::size_t>(r_count))
      fail(Err::MalformedFile, where + ": expected " + std::to_string(r_count) + " reals");
    for (const auto& t : toks) cb.centroids[c].push_back(parse_real(t, where));
  }
  return cb;
}

}  // namespace mvdfq
