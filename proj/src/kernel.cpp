#include "mvdfq/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mvdfq/error.hpp"

namespace mvdfq {

namespace {

constexpr std::uint64_t kMaxId = std::numeric_limits<std::uint64_t>::max();

// a*b, or saturate at uint64 max on overflow
std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxId / a) return kMaxId;
  return a * b;
}

void check_symbols(const std::vector<Symbol>& row, Symbol alphabet_size, Symbol alphabet_min) {
  for (Symbol s : row)
    if (s < alphabet_min || s - alphabet_min >= alphabet_size)
      fail(Err::SymbolOutOfRange, "symbol " + std::to_string(s) + " outside [" +
                                      std::to_string(alphabet_min) + ", " +
                                      std::to_string(alphabet_min + alphabet_size) + ")");
}

void check_id_space(std::uint64_t radix, int k, int t, int d, KernelSpec::Base base) {
  std::uint64_t span = 1;
  if (base == KernelSpec::Base::sssk) {
    for (int i = 0; i < t; ++i) span = mul_sat(span, radix);
    for (int i = 0; i + 1 < t; ++i) span = mul_sat(span, static_cast<std::uint64_t>(d));
  } else {
    for (int i = 0; i < k; ++i) span = mul_sat(span, radix);
  }
  if (span == kMaxId)
    fail(Err::InvalidParams, "feature-id space exceeds 64 bits for this alphabet");
}

// sort raw ids and run-length encode into a FeatureVector
FeatureVector collect(std::vector<std::uint64_t>& ids) {
  std::sort(ids.begin(), ids.end());
  FeatureVector fv;
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    fv.entries.emplace_back(ids[i], static_cast<double>(j - i));
    i = j;
  }
  fv.total = static_cast<double>(ids.size());
  return fv;
}

}  // namespace

std::uint64_t kmer_radix(Symbol alphabet_size, Symbol alphabet_min) {
  return static_cast<std::uint64_t>(alphabet_size) + alphabet_min;
}

void validate_spec(const KernelSpec& spec) {
  if (spec.alphabet_size < 1) fail(Err::InvalidParams, "alphabet_size must be >= 1");
  std::uint64_t radix = kmer_radix(spec.alphabet_size, spec.alphabet_min);
  switch (spec.base) {
    case KernelSpec::Base::spectrum:
      if (spec.k < 1) fail(Err::InvalidParams, "k must be >= 1");
      break;
    case KernelSpec::Base::mismatch:
      if (spec.k < 1) fail(Err::InvalidParams, "k must be >= 1");
      if (spec.m < 0 || spec.m >= spec.k) fail(Err::InvalidParams, "need 0 <= m < k");
      break;
    case KernelSpec::Base::sssk:
      if (spec.t != 2 && spec.t != 3) fail(Err::InvalidParams, "t must be 2 or 3");
      if (spec.d < 1) fail(Err::InvalidParams, "d must be >= 1");
      break;
  }
  check_id_space(radix, spec.k, spec.t, spec.d, spec.base);
}

FeatureVector spectrum_features(const std::vector<Symbol>& row, int k, Symbol alphabet_size,
                                Symbol alphabet_min) {
  if (k < 1) fail(Err::InvalidParams, "k must be >= 1");
  if (alphabet_size < 1) fail(Err::InvalidParams, "alphabet_size must be >= 1");
  check_symbols(row, alphabet_size, alphabet_min);
  std::uint64_t radix = kmer_radix(alphabet_size, alphabet_min);
  check_id_space(radix, k, 0, 0, KernelSpec::Base::spectrum);

  if (row.size() < static_cast<std::size_t>(k)) return {};
  std::vector<std::uint64_t> ids;
  ids.reserve(row.size() - k + 1);
  for (std::size_t i = 0; i + k <= row.size(); ++i) {
    std::uint64_t id = 0;
    std::uint64_t pw = 1;
    for (int j = 0; j < k; ++j, pw *= radix) id += row[i + j] * pw;
    ids.push_back(id);
  }
  return collect(ids);
}

FeatureVector mismatch_features(const std::vector<Symbol>& row, int k, int m, Symbol alphabet_size,
                                Symbol alphabet_min) {
  if (k < 1) fail(Err::InvalidParams, "k must be >= 1");
  if (m < 0 || m >= k) fail(Err::InvalidParams, "need 0 <= m < k");
  if (alphabet_size < 1) fail(Err::InvalidParams, "alphabet_size must be >= 1");
  FeatureVector spec = spectrum_features(row, k, alphabet_size, alphabet_min);
  if (m == 0) return spec;

  std::uint64_t radix = kmer_radix(alphabet_size, alphabet_min);
  std::vector<std::uint64_t> pw(k);
  pw[0] = 1;
  for (int j = 1; j < k; ++j) pw[j] = pw[j - 1] * radix;

  std::vector<Symbol> kmer(k);
  std::vector<std::pair<std::uint64_t, double>> raw;
  // expand each distinct observed k-mer into its Hamming-<=m neighborhood;
  // substitutions always differ from the original symbol, so each neighbor
  // is produced exactly once
  for (const auto& [base_id, count] : spec.entries) {
    std::uint64_t rest = base_id;
    for (int j = 0; j < k; ++j) {
      kmer[j] = static_cast<Symbol>(rest % radix);
      rest /= radix;
    }
    auto expand = [&](auto&& self, int pos, int left, std::uint64_t id) -> void {
      if (left == 0 || pos == k) {
        raw.emplace_back(id, count);
        return;
      }
      self(self, pos + 1, left, id);
      for (Symbol s = alphabet_min; s - alphabet_min < alphabet_size; ++s) {
        if (s == kmer[pos]) continue;
        self(self, pos + 1, left - 1, id - kmer[pos] * pw[pos] + s * pw[pos]);
      }
    };
    expand(expand, 0, m, base_id);
  }

  std::sort(raw.begin(), raw.end());
  FeatureVector fv;
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    double w = 0.0;
    while (j < raw.size() && raw[j].first == raw[i].first) w += raw[j++].second;
    fv.entries.emplace_back(raw[i].first, w);
    i = j;
  }
  for (const auto& e : fv.entries) fv.total += e.second;
  return fv;
}

FeatureVector sssk_features(const std::vector<Symbol>& row, int t, int d, Symbol alphabet_size,
                            Symbol alphabet_min) {
  if (t != 2 && t != 3) fail(Err::InvalidParams, "t must be 2 or 3");
  if (d < 1) fail(Err::InvalidParams, "d must be >= 1");
  if (alphabet_size < 1) fail(Err::InvalidParams, "alphabet_size must be >= 1");
  check_symbols(row, alphabet_size, alphabet_min);
  std::uint64_t radix = kmer_radix(alphabet_size, alphabet_min);
  check_id_space(radix, 0, t, d, KernelSpec::Base::sssk);

  const std::size_t n = row.size();
  const std::size_t gap = static_cast<std::size_t>(d);
  std::vector<std::uint64_t> ids;
  for (std::size_t p1 = 0; p1 < n; ++p1) {
    for (std::size_t p2 = p1 + 1; p2 < n && p2 - p1 <= gap; ++p2) {
      std::uint64_t d1 = p2 - p1;
      std::uint64_t head = row[p1] + radix * ((d1 - 1) + d * static_cast<std::uint64_t>(row[p2]));
      if (t == 2) {
        ids.push_back(head);
        continue;
      }
      for (std::size_t p3 = p2 + 1; p3 < n && p3 - p2 <= gap; ++p3) {
        std::uint64_t d2 = p3 - p2;
        ids.push_back(head +
                      radix * d * radix * ((d2 - 1) + d * static_cast<std::uint64_t>(row[p3])));
      }
    }
  }
  return collect(ids);
}

FeatureVector manifold_embed(const FeatureVector& phi) {
  for (const auto& e : phi.entries)
    if (e.second < 0.0) fail(Err::NegativeWeight, "negative feature weight");
  if (phi.total < 0.0) fail(Err::NegativeWeight, "negative feature total");
  if (phi.total == 0.0) return phi;
  FeatureVector out;
  out.total = phi.total;
  out.entries.reserve(phi.entries.size());
  for (const auto& e : phi.entries)
    out.entries.emplace_back(e.first, std::sqrt(e.second / phi.total));
  return out;
}

FeatureVector row_features(const std::vector<Symbol>& row, const KernelSpec& spec) {
  validate_spec(spec);
  FeatureVector fv;
  switch (spec.base) {
    case KernelSpec::Base::spectrum:
      fv = spectrum_features(row, spec.k, spec.alphabet_size, spec.alphabet_min);
      break;
    case KernelSpec::Base::mismatch:
      fv = mismatch_features(row, spec.k, spec.m, spec.alphabet_size, spec.alphabet_min);
      break;
    case KernelSpec::Base::sssk:
      fv = sssk_features(row, spec.t, spec.d, spec.alphabet_size, spec.alphabet_min);
      break;
  }
  if (spec.manifold) fv = manifold_embed(fv);
  return fv;
}

std::vector<FeatureVector> sequence_features(const DiscreteSequence& dx, const KernelSpec& spec) {
  if (dx.alphabet_size != spec.alphabet_size || dx.alphabet_min != spec.alphabet_min)
    fail(Err::AlphabetMismatch, "sequence " + dx.id + " alphabet differs from kernel spec");
  std::vector<FeatureVector> out;
  out.reserve(dx.dims());
  for (const auto& row : dx.rows) out.push_back(row_features(row, spec));
  return out;
}

double univariate_kernel(const FeatureVector& fx, const FeatureVector& fy) {
  double s = 0.0;
  std::size_t i = 0, j = 0;
  while (i < fx.entries.size() && j < fy.entries.size()) {
    std::uint64_t a = fx.entries[i].first, b = fy.entries[j].first;
    if (a < b)
      ++i;
    else if (b < a)
      ++j;
    else
      s += fx.entries[i++].second * fy.entries[j++].second;
  }
  return s;
}

double features_dot(const std::vector<FeatureVector>& fx, const std::vector<FeatureVector>& fy) {
  double s = 0.0;
  for (std::size_t r = 0; r < fx.size(); ++r) s += univariate_kernel(fx[r], fy[r]);
  return s;
}

double mvdfq_kernel(const DiscreteSequence& dx, const DiscreteSequence& dy,
                    const KernelSpec& spec) {
  if (dx.dims() != dy.dims())
    fail(Err::DimensionMismatch,
         "R=" + std::to_string(dx.dims()) + " vs R=" + std::to_string(dy.dims()));
  if (dx.alphabet_size != dy.alphabet_size || dx.alphabet_min != dy.alphabet_min)
    fail(Err::AlphabetMismatch, dx.id + " and " + dy.id + " use different alphabets");
  auto fx = sequence_features(dx, spec);
  auto fy = sequence_features(dy, spec);
  double k = features_dot(fx, fy);
  if (!spec.cosine_normalize) return k;
  double kx = features_dot(fx, fx);
  double ky = features_dot(fy, fy);
  if (kx == 0.0 || ky == 0.0) return 0.0;
  return k / std::sqrt(kx * ky);
}

}  // namespace mvdfq
