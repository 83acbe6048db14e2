#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "mvdfq/kernel.hpp"
#include "mvdfq/oracle.hpp"
#include "test_util.hpp"

using namespace mvdfq;
using testutil::make_discrete;
using testutil::random_row;
using testutil::thrown_kind;

namespace {

KernelSpec spectrum_spec(int k, Symbol size, Symbol min = 0) {
  KernelSpec s;
  s.base = KernelSpec::Base::spectrum;
  s.k = k;
  s.alphabet_size = size;
  s.alphabet_min = min;
  return s;
}

}  // namespace

TEST_CASE("spectrum counts k-mers") {
  auto fv = spectrum_features({1, 2, 1, 2}, 2, 3);
  auto decoded = oracle::decode(fv, spectrum_spec(2, 3));
  oracle::FeatureMap expect{{{1, 2}, 2.0}, {{2, 1}, 1.0}};
  CHECK(decoded == expect);
  CHECK(fv.total == 3.0);

  CHECK(spectrum_features({1, 2, 1}, 5, 3).entries.empty());

  auto unigram = spectrum_features({7, 7, 7}, 1, 8);
  auto udec = oracle::decode(unigram, spectrum_spec(1, 8));
  CHECK(udec == oracle::FeatureMap{{{7}, 3.0}});
}

TEST_CASE("spectrum validates symbols and parameters") {
  CHECK(thrown_kind([] { spectrum_features({5}, 1, 4); }) == Err::SymbolOutOfRange);
  CHECK(thrown_kind([] { spectrum_features({1}, 0, 4); }) == Err::InvalidParams);
  // 2048-symbol alphabet at k=6 would need 67 bits of feature id
  KernelSpec spec = spectrum_spec(6, 2048, 1);
  CHECK(thrown_kind([&] { validate_spec(spec); }) == Err::InvalidParams);
}

TEST_CASE("mismatch expands the mutational neighborhood") {
  KernelSpec spec;
  spec.base = KernelSpec::Base::mismatch;
  spec.k = 2;
  spec.m = 1;
  spec.alphabet_size = 2;
  spec.alphabet_min = 1;

  auto fx = mismatch_features({1, 2}, 2, 1, 2, 1);
  auto dx = oracle::decode(fx, spec);
  oracle::FeatureMap expect{{{1, 2}, 1.0}, {{2, 2}, 1.0}, {{1, 1}, 1.0}};
  CHECK(dx == expect);

  auto fy = mismatch_features({2, 2}, 2, 1, 2, 1);
  CHECK(univariate_kernel(fx, fy) == 2.0);

  CHECK(thrown_kind([] { mismatch_features({1, 2}, 2, 2, 3); }) == Err::InvalidParams);
}

TEST_CASE("mismatch with m=0 equals spectrum") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Symbol size = 2 + static_cast<Symbol>(rng.below(5));
    int k = 1 + static_cast<int>(rng.below(3));
    auto row = random_row(rng, 30, size);
    auto a = mismatch_features(row, k, 0, size);
    auto b = spectrum_features(row, k, size);
    CHECK(a.entries == b.entries);
    CHECK(a.total == b.total);
  }
}

TEST_CASE("sssk enumerates gapped symbol tuples") {
  KernelSpec spec;
  spec.base = KernelSpec::Base::sssk;
  spec.t = 2;
  spec.d = 2;
  spec.alphabet_size = 3;

  auto fv = sssk_features({1, 2, 1}, 2, 2, 3);
  auto dec = oracle::decode(fv, spec);
  oracle::FeatureMap expect{{{1, 1, 2}, 1.0}, {{2, 1, 1}, 1.0}, {{1, 2, 1}, 1.0}};
  CHECK(dec == expect);

  CHECK(sssk_features({1}, 2, 2, 3).entries.empty());
  CHECK(sssk_features({5, 5}, 3, 5, 6).entries.empty());
  CHECK(thrown_kind([] { sssk_features({1}, 4, 2, 3); }) == Err::InvalidParams);
}

TEST_CASE("feature maps match their brute-force enumerators") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Symbol min = trial % 2 ? 1 : 0;  // DFQ-style and VQ-style alphabets
    Symbol size = 2 + static_cast<Symbol>(rng.below(5));
    auto row = random_row(rng, 30, size, min);

    int k = 1 + static_cast<int>(rng.below(3));
    KernelSpec sp = spectrum_spec(k, size, min);
    CHECK(oracle::decode(spectrum_features(row, k, size, min), sp) ==
          oracle::brute_spectrum(row, k));

    int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(k, 2))));
    KernelSpec mm = sp;
    mm.base = KernelSpec::Base::mismatch;
    mm.m = m;
    CHECK(oracle::decode(mismatch_features(row, k, m, size, min), mm) ==
          oracle::brute_mismatch(row, k, m, size, min));

    int t = 2 + static_cast<int>(rng.below(2));
    int d = 1 + static_cast<int>(rng.below(4));
    KernelSpec ss = sp;
    ss.base = KernelSpec::Base::sssk;
    ss.t = t;
    ss.d = d;
    CHECK(oracle::decode(sssk_features(row, t, d, size, min), ss) ==
          oracle::brute_sssk(row, t, d));
  }
}

TEST_CASE("manifold embedding normalizes onto the sphere") {
  FeatureVector phi;
  phi.entries = {{3, 1.0}, {9, 3.0}};
  phi.total = 4.0;
  auto e = manifold_embed(phi);
  CHECK(e.entries[0].second == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(e.entries[1].second == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  CHECK(univariate_kernel(e, e) == doctest::Approx(1.0).epsilon(1e-12));

  FeatureVector empty;
  CHECK(manifold_embed(empty).entries.empty());

  FeatureVector bad;
  bad.entries = {{1, -2.0}};
  bad.total = -2.0;
  CHECK(thrown_kind([&] { manifold_embed(bad); }) == Err::NegativeWeight);
}

TEST_CASE("univariate kernel is a sparse dot product") {
  auto fx = spectrum_features({1, 2, 1, 2}, 2, 3);
  auto fy = spectrum_features({1, 2}, 2, 3);
  CHECK(univariate_kernel(fx, fy) == 2.0);
  CHECK(univariate_kernel(FeatureVector{}, fy) == 0.0);

  double self = 0.0;
  for (const auto& e : fx.entries) self += e.second * e.second;
  CHECK(univariate_kernel(fx, fx) == self);
}

TEST_CASE("multivariate kernel decomposes over rows") {
  auto x = make_discrete("x", {{1, 2, 1, 2}, {0, 0, 1}}, 4);
  auto y = make_discrete("y", {{1, 2, 1, 2}, {2, 3, 2}}, 4);
  KernelSpec spec = spectrum_spec(2, 4);

  double row1_self = univariate_kernel(spectrum_features({1, 2, 1, 2}, 2, 4),
                                       spectrum_features({1, 2, 1, 2}, 2, 4));
  CHECK(mvdfq_kernel(x, y, spec) == row1_self);

  auto x1 = make_discrete("x1", {{1, 2, 1, 2}}, 4);
  auto y1 = make_discrete("y1", {{2, 1, 2}}, 4);
  CHECK(mvdfq_kernel(x1, y1, spec) ==
        univariate_kernel(spectrum_features({1, 2, 1, 2}, 2, 4),
                          spectrum_features({2, 1, 2}, 2, 4)));

  auto bad_r = make_discrete("z", {{1, 2}}, 4);
  CHECK(thrown_kind([&] { mvdfq_kernel(x, bad_r, spec); }) == Err::DimensionMismatch);
  auto bad_alpha = make_discrete("w", {{1, 2}, {1, 2}}, 5);
  CHECK(thrown_kind([&] { mvdfq_kernel(x, bad_alpha, spec); }) == Err::AlphabetMismatch);
}

TEST_CASE("manifold self-kernel equals the row count") {
  auto x = make_discrete("x", {{1, 2, 1, 2, 3}, {0, 0, 1, 0, 2}, {3, 3, 3, 3, 3}}, 4);
  KernelSpec spec = spectrum_spec(2, 4);
  spec.manifold = true;
  CHECK(mvdfq_kernel(x, x, spec) == doctest::Approx(3.0).epsilon(1e-12));

  // a row shorter than k contributes nothing
  auto y = make_discrete("y", {{1, 2, 1}, {3}}, 4);
  CHECK(mvdfq_kernel(y, y, spec) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kernel symmetry is exact and Cauchy-Schwarz holds") {
  Rng rng(41);
  KernelSpec spec = spectrum_spec(3, 5);
  spec.manifold = true;
  for (int trial = 0; trial < 30; ++trial) {
    DiscreteSequence x, y;
    x.id = "x";
    y.id = "y";
    x.alphabet_size = y.alphabet_size = 5;
    std::size_t dims = 1 + rng.below(4);
    for (std::size_t r = 0; r < dims; ++r) {
      x.rows.push_back(random_row(rng, 25, 5));
      y.rows.push_back(random_row(rng, 25, 5));
    }
    double kxy = mvdfq_kernel(x, y, spec);
    CHECK(kxy == mvdfq_kernel(y, x, spec));
    double kxx = mvdfq_kernel(x, x, spec);
    double kyy = mvdfq_kernel(y, y, spec);
    CHECK(kxy * kxy <= kxx * kyy * (1.0 + 1e-9) + 1e-12);
  }
}

TEST_CASE("cosine normalization") {
  auto x = make_discrete("x", {{1, 2, 1, 2, 3, 1}}, 4);
  auto y = make_discrete("y", {{2, 2, 1, 3}}, 4);
  KernelSpec spec = spectrum_spec(2, 4);
  spec.cosine_normalize = true;
  CHECK(mvdfq_kernel(x, x, spec) == doctest::Approx(1.0).epsilon(1e-12));
  double v = mvdfq_kernel(x, y, spec);
  CHECK(v >= 0.0);
  CHECK(v <= 1.0 + 1e-12);

  auto empty = make_discrete("e", {{}}, 4);
  CHECK(mvdfq_kernel(x, empty, spec) == 0.0);
  CHECK(mvdfq_kernel(empty, empty, spec) == 0.0);
}
