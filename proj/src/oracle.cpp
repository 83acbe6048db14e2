#include "mvdfq/oracle.hpp"

#include "mvdfq/error.hpp"

namespace mvdfq::oracle {

FeatureMap brute_spectrum(const std::vector<Symbol>& row, int k) {
  FeatureMap out;
  if (row.size() < static_cast<std::size_t>(k)) return out;
  for (std::size_t i = 0; i + k <= row.size(); ++i)
    out[std::vector<Symbol>(row.begin() + i, row.begin() + i + k)] += 1.0;
  return out;
}

FeatureMap brute_mismatch(const std::vector<Symbol>& row, int k, int m, Symbol alphabet_size,
                          Symbol alphabet_min) {
  std::vector<std::vector<Symbol>> observed;
  if (row.size() >= static_cast<std::size_t>(k))
    for (std::size_t i = 0; i + k <= row.size(); ++i)
      observed.emplace_back(row.begin() + i, row.begin() + i + k);

  FeatureMap out;
  std::vector<Symbol> gamma(k, alphabet_min);
  while (true) {
    double count = 0.0;
    for (const auto& alpha : observed) {
      int dist = 0;
      for (int j = 0; j < k; ++j) dist += alpha[j] != gamma[j];
      if (dist <= m) count += 1.0;
    }
    if (count > 0.0) out[gamma] = count;

    // odometer step through Sigma^k
    int pos = 0;
    while (pos < k) {
      if (++gamma[pos] - alphabet_min < alphabet_size) break;
      gamma[pos] = alphabet_min;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

FeatureMap brute_sssk(const std::vector<Symbol>& row, int t, int d) {
  FeatureMap out;
  const std::size_t n = row.size();
  const std::size_t gap = static_cast<std::size_t>(d);
  for (std::size_t p1 = 0; p1 < n; ++p1)
    for (std::size_t p2 = p1 + 1; p2 < n && p2 - p1 <= gap; ++p2) {
      if (t == 2) {
        out[{row[p1], static_cast<Symbol>(p2 - p1), row[p2]}] += 1.0;
        continue;
      }
      for (std::size_t p3 = p2 + 1; p3 < n && p3 - p2 <= gap; ++p3)
        out[{row[p1], static_cast<Symbol>(p2 - p1), row[p2], static_cast<Symbol>(p3 - p2),
             row[p3]}] += 1.0;
    }
  return out;
}

double dot(const FeatureMap& a, const FeatureMap& b) {
  double s = 0.0;
  for (const auto& [key, w] : a) {
    auto it = b.find(key);
    if (it != b.end()) s += w * it->second;
  }
  return s;
}

FeatureMap decode(const FeatureVector& fv, const KernelSpec& spec) {
  std::uint64_t radix = kmer_radix(spec.alphabet_size, spec.alphabet_min);
  FeatureMap out;
  for (const auto& [id, w] : fv.entries) {
    std::vector<Symbol> key;
    std::uint64_t rest = id;
    if (spec.base == KernelSpec::Base::sssk) {
      for (int i = 0; i < spec.t; ++i) {
        key.push_back(static_cast<Symbol>(rest % radix));
        rest /= radix;
        if (i + 1 < spec.t) {
          key.push_back(static_cast<Symbol>(rest % spec.d) + 1);
          rest /= spec.d;
        }
      }
    } else {
      for (int i = 0; i < spec.k; ++i) {
        key.push_back(static_cast<Symbol>(rest % radix));
        rest /= radix;
      }
    }
    if (rest != 0) fail(Err::InvalidParams, "feature id does not decode under this spec");
    out[key] = w;
  }
  return out;
}

}  // namespace mvdfq::oracle
