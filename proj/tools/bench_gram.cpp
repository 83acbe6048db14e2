#include <chrono>
#include <functional>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "mvdfq/cv.hpp"
#include "mvdfq/gram.hpp"
#include "mvdfq/quantize.hpp"
#include "mvdfq/synth.hpp"

using namespace mvdfq;

namespace {

double wall_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compare the cached parallel gram against the per-pair reference"};
  int n_seqs = 60, dims = 3, length = 300, bins = 16, k = 3, threads = 0, repeats = 3;
  bool reference = false;
  std::uint64_t seed = 1;
  app.add_option("--sequences", n_seqs);
  app.add_option("--dims", dims);
  app.add_option("--length", length);
  app.add_option("--bins", bins);
  app.add_option("--k", k);
  app.add_option("--threads", threads);
  app.add_option("--repeats", repeats);
  app.add_option("--seed", seed);
  app.add_flag("--reference", reference, "also time the uncached serial baseline");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  auto data = make_synth(3, (n_seqs + 2) / 3, dims, length, seed);
  data.resize(n_seqs);
  auto quantizer = fit_uniform_quantizer(data, bins);
  auto discrete = discretize_all(data, &quantizer, nullptr);

  KernelSpec spec;
  spec.base = KernelSpec::Base::spectrum;
  spec.k = k;
  spec.alphabet_size = quantizer.alphabet_size();

  GramMatrix cached, plain;
  for (int r = 0; r < repeats; ++r) {
    double ms = wall_ms([&] { cached = compute_gram(discrete, spec); });
    std::cout << "compute_gram          N=" << n_seqs << " n=" << length << " run " << r + 1
              << ": " << ms << " ms\n";
  }
  if (reference) {
    for (int r = 0; r < repeats; ++r) {
      double ms = wall_ms([&] { plain = compute_gram_reference(discrete, spec); });
      std::cout << "compute_gram_reference N=" << n_seqs << " n=" << length << " run " << r + 1
                << ": " << ms << " ms\n";
    }
    for (std::size_t i = 0; i < cached.size(); ++i)
      for (std::size_t j = 0; j < cached.size(); ++j)
        if (cached.values[i][j] != plain.values[i][j]) {
          std::cerr << "MISMATCH at (" << i << "," << j << ")\n";
          return 1;
        }
    std::cout << "cached and reference matrices agree exactly\n";
  }
  return 0;
}
