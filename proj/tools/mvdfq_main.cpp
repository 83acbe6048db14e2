#include <cmath>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "mvdfq/cv.hpp"
#include "mvdfq/dataset.hpp"
#include "mvdfq/discrete_io.hpp"
#include "mvdfq/error.hpp"
#include "mvdfq/gram.hpp"
#include "mvdfq/kernel.hpp"
#include "mvdfq/metrics.hpp"
#include "mvdfq/oracle.hpp"
#include "mvdfq/quantize.hpp"
#include "mvdfq/rng.hpp"
#include "mvdfq/svm.hpp"
#include "mvdfq/synth.hpp"
#include "mvdfq/textio.hpp"

namespace {

using namespace mvdfq;

struct KernelFlags {
  std::string kernel = "spectrum";
  int k = -1;  // -1 = unset, resolved per pipeline
  int m = 1;
  int t = 3;
  int d = 5;
  bool manifold = false;
  bool normalize = false;
};

void add_kernel_flags(CLI::App* cmd, KernelFlags& kf) {
  cmd->add_option("--kernel", kf.kernel, "base kernel")
      ->check(CLI::IsMember({"spectrum", "mismatch", "sssk"}));
  cmd->add_option("--k", kf.k, "k-mer length (default 6, or 5 on a VQ pipeline)");
  cmd->add_option("--m", kf.m, "mismatch budget (default 1)");
  cmd->add_option("--t", kf.t, "sssk monomer count (default 3)");
  cmd->add_option("--d", kf.d, "sssk maximum gap (default 5)");
  cmd->add_flag("--manifold", kf.manifold, "embed feature vectors on the multinomial manifold");
  cmd->add_flag("--normalize", kf.normalize, "cosine-normalize kernel values");
}

KernelSpec kernel_from_flags(const KernelFlags& kf, bool vq_pipeline) {
  KernelSpec spec;
  if (kf.kernel == "spectrum")
    spec.base = KernelSpec::Base::spectrum;
  else if (kf.kernel == "mismatch")
    spec.base = KernelSpec::Base::mismatch;
  else
    spec.base = KernelSpec::Base::sssk;
  spec.k = kf.k >= 0 ? kf.k : (vq_pipeline ? 5 : 6);
  spec.m = kf.m;
  spec.t = kf.t;
  spec.d = kf.d;
  spec.manifold = kf.manifold;
  spec.cosine_normalize = kf.normalize;
  return spec;
}

void apply_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::map<std::string, std::string> labels_by_id(const std::string& manifest_path) {
  std::map<std::string, std::string> out;
  for (const auto& row : load_manifest(manifest_path)) out[row.id] = row.label;
  return out;
}

void write_report(const EvalReport& rep, const std::string& path) {
  std::ostringstream out;
  out << "metric\tvalue\n";
  out << "error_rate\t" << fmt_real(rep.error_rate) << "\n";
  out << "macro_f1\t" << fmt_real(rep.macro_f1) << "\n";
  for (const auto& [cls, f1] : rep.per_class_f1) out << "f1:" << cls << '\t' << fmt_real(f1) << "\n";
  if (rep.roc50) out << "roc50\t" << fmt_real(*rep.roc50) << "\n";
  for (std::size_t t = 0; t < rep.classes.size(); ++t)
    for (std::size_t p = 0; p < rep.classes.size(); ++p)
      out << "confusion:" << rep.classes[t] << ':' << rep.classes[p] << '\t'
          << rep.confusion[t][p] << "\n";
  write_file(path, out.str());
}

// ---- selftest ----------------------------------------------------------

std::vector<Symbol> random_row(Rng& rng, std::size_t max_len, Symbol alphabet_size,
                               Symbol alphabet_min) {
  std::vector<Symbol> row(rng.below(max_len + 1));
  for (auto& s : row) s = alphabet_min + static_cast<Symbol>(rng.below(alphabet_size));
  return row;
}

int run_selftest() {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  Rng rng(0xC0FFEE);

  {
    bool ok = true;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      Symbol size = 2 + static_cast<Symbol>(rng.below(5));
      int k = 1 + static_cast<int>(rng.below(3));
      auto row = random_row(rng, 30, size, 0);
      KernelSpec spec;
      spec.base = KernelSpec::Base::spectrum;
      spec.k = k;
      spec.alphabet_size = size;
      ok = oracle::decode(spectrum_features(row, k, size), spec) == oracle::brute_spectrum(row, k);
    }
    report("spectrum matches brute-force enumeration", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      Symbol size = 2 + static_cast<Symbol>(rng.below(5));
      int k = 1 + static_cast<int>(rng.below(3));
      int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(k, 2))));
      auto row = random_row(rng, 30, size, 0);
      KernelSpec spec;
      spec.base = KernelSpec::Base::mismatch;
      spec.k = k;
      spec.m = m;
      spec.alphabet_size = size;
      ok = oracle::decode(mismatch_features(row, k, m, size), spec) ==
           oracle::brute_mismatch(row, k, m, size);
    }
    report("mismatch matches the exhaustive alphabet scan", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      Symbol size = 2 + static_cast<Symbol>(rng.below(5));
      int t = 2 + static_cast<int>(rng.below(2));
      int d = 1 + static_cast<int>(rng.below(4));
      auto row = random_row(rng, 30, size, 0);
      KernelSpec spec;
      spec.base = KernelSpec::Base::sssk;
      spec.t = t;
      spec.d = d;
      spec.alphabet_size = size;
      ok = oracle::decode(sssk_features(row, t, d, size), spec) == oracle::brute_sssk(row, t, d);
    }
    report("sssk matches the position-tuple enumeration", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      Symbol size = 2 + static_cast<Symbol>(rng.below(5));
      int k = 1 + static_cast<int>(rng.below(3));
      auto row = random_row(rng, 30, size, 0);
      auto a = mismatch_features(row, k, 0, size);
      auto b = spectrum_features(row, k, size);
      ok = a.entries == b.entries && a.total == b.total;
    }
    report("mismatch with m=0 reduces to spectrum", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      Symbol size = 2 + static_cast<Symbol>(rng.below(5));
      std::size_t dims = 1 + rng.below(8);
      KernelSpec spec;
      spec.base = KernelSpec::Base::spectrum;
      spec.k = 2;
      spec.alphabet_size = size;
      DiscreteSequence x, y;
      x.id = "x";
      y.id = "y";
      x.alphabet_size = y.alphabet_size = size;
      x.alphabet_min = y.alphabet_min = 0;
      for (std::size_t r = 0; r < dims; ++r) {
        x.rows.push_back(random_row(rng, 20, size, 0));
        y.rows.push_back(random_row(rng, 20, size, 0));
      }
      double whole = mvdfq_kernel(x, y, spec);
      double parts = 0.0;
      for (std::size_t r = 0; r < dims; ++r) {
        DiscreteSequence xr = x, yr = y;
        xr.rows = {x.rows[r]};
        yr.rows = {y.rows[r]};
        parts += mvdfq_kernel(xr, yr, spec);
      }
      ok = whole == parts && whole == mvdfq_kernel(y, x, spec);
    }
    report("kernel decomposes over rows and is symmetric", ok);
  }
  {
    KernelSpec spec;
    spec.base = KernelSpec::Base::spectrum;
    spec.k = 2;
    spec.manifold = true;
    spec.alphabet_size = 4;
    DiscreteSequence x;
    x.id = "x";
    x.alphabet_size = 4;
    x.alphabet_min = 0;
    x.rows = {{1, 2, 1, 2, 3}, {0, 0, 1, 0, 2}, {3, 3, 3, 3, 3}};
    double self = mvdfq_kernel(x, x, spec);
    report("manifold self-kernel equals the number of rows",
           std::abs(self - 3.0) <= 1e-12);
  }
  {
    bool ok = true;
    std::vector<Sequence> data(1);
    data[0].id = "s";
    data[0].label = "a";
    data[0].values = {{}};
    for (int i = 0; i < 200; ++i) data[0].values[0].push_back(rng.next_gauss() * 10.0);
    auto model = fit_uniform_quantizer(data, 16);
    double lo = model.dims[0].f_min, hi = model.dims[0].f_max;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      double f1 = lo - 5.0 + rng.next_double() * (hi - lo + 10.0);
      double f2 = lo - 5.0 + rng.next_double() * (hi - lo + 10.0);
      if (f1 > f2) std::swap(f1, f2);
      Symbol s1 = quantize_value(model, 0, f1), s2 = quantize_value(model, 0, f2);
      ok = s1 <= s2 && s2 <= 17;
      if (f2 > hi) ok = ok && s2 == 17;
      if (f1 < lo) ok = ok && s1 == 0;
    }
    ok = ok && quantize_value(model, 0, hi) == 16;
    report("quantizer is monotone with sentinel symbols", ok);
  }
  {
    bool ok = roc50({0.9, 0.8, 0.7, 0.6}, {1, -1, 1, -1}) == 0.75;
    ok = ok && roc50({0.9, 0.8, 0.2, 0.1}, {1, 1, -1, -1}) == 1.0;
    ok = ok && roc50({0.9, 0.8, 0.2, 0.1}, {-1, -1, 1, 1}) == 0.0;
    auto rep = evaluate({"a", "a", "a", "a"}, {"a", "a", "b", "b"});
    ok = ok && rep.error_rate == 0.5 && std::abs(rep.macro_f1 - 1.0 / 3.0) <= 1e-15;
    report("metric hand cases", ok);
  }
  {
    GramMatrix g;
    g.ids = {"p", "q"};
    g.values = {{1.0, 0.0}, {0.0, 1.0}};
    TrainOptions opt;
    opt.C = 10.0;
    SvmModel m = train_svm(g, {1, -1}, opt);
    bool ok = m.support_ids.size() == 2 && std::abs(m.alphas[0] - 1.0) <= 1e-6 &&
              std::abs(m.alphas[1] + 1.0) <= 1e-6 && std::abs(m.bias) <= 1e-6;
    report("two-point svm analytic solution", ok);
  }

  std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete-sequence string kernels over quantized multivariate data"};
  app.require_subcommand(1);
  int exit_code = 0;

  // fit-quantizer
  auto* fq = app.add_subcommand("fit-quantizer", "fit a per-dimension quantizer");
  struct {
    std::string manifest, out, quantizer = "uniform";
    int bins = 32, iters = 100;
    std::uint64_t seed = 1;
  } fq_opt;
  fq->add_option("--manifest", fq_opt.manifest)->required();
  fq->add_option("--bins", fq_opt.bins, "bins per dimension (default 32)");
  fq->add_option("--quantizer", fq_opt.quantizer, "uniform|kmeans")
      ->check(CLI::IsMember({"uniform", "kmeans"}));
  fq->add_option("--fit-iters", fq_opt.iters);
  fq->add_option("--seed", fq_opt.seed);
  fq->add_option("--out", fq_opt.out)->required();
  fq->callback([&] {
    auto data = ingest_csv(fq_opt.manifest);
    QuantizerModel model = fq_opt.quantizer == "uniform"
                               ? fit_uniform_quantizer(data, fq_opt.bins)
                               : fit_kmeans_quantizer(data, fq_opt.bins, fq_opt.iters, fq_opt.seed);
    save_quantizer(model, fq_opt.out);
  });

  // fit-codebook
  auto* fc = app.add_subcommand("fit-codebook", "fit a VQ codebook over pooled feature vectors");
  struct {
    std::string manifest, out;
    int codewords = 2048, iters = 100;
    std::uint64_t seed = 1;
  } fc_opt;
  fc->add_option("--manifest", fc_opt.manifest)->required();
  fc->add_option("--codebook-size", fc_opt.codewords, "codewords (default 2048)");
  fc->add_option("--fit-iters", fc_opt.iters);
  fc->add_option("--seed", fc_opt.seed);
  fc->add_option("--out", fc_opt.out)->required();
  fc->callback([&] {
    auto data = ingest_csv(fc_opt.manifest);
    save_codebook(fit_vq_codebook(data, fc_opt.codewords, fc_opt.iters, fc_opt.seed), fc_opt.out);
  });

  // discretize
  auto* dz = app.add_subcommand("discretize", "apply a quantizer or codebook to a manifest");
  struct {
    std::string manifest, quantizer_file, codebook_file, out;
  } dz_opt;
  dz->add_option("--manifest", dz_opt.manifest)->required();
  auto* dz_q = dz->add_option("--quantizer-file", dz_opt.quantizer_file);
  auto* dz_c = dz->add_option("--codebook-file", dz_opt.codebook_file);
  dz_q->excludes(dz_c);
  dz->add_option("--out", dz_opt.out)->required();
  dz->callback([&] {
    if (dz_opt.quantizer_file.empty() && dz_opt.codebook_file.empty())
      fail(Err::InvalidParams, "pass --quantizer-file or --codebook-file");
    auto data = ingest_csv(dz_opt.manifest);
    if (!dz_opt.quantizer_file.empty()) {
      QuantizerModel model = load_quantizer(dz_opt.quantizer_file);
      save_discrete(discretize_all(data, &model, nullptr), dz_opt.out);
    } else {
      Codebook cb = load_codebook(dz_opt.codebook_file);
      save_discrete(discretize_all(data, nullptr, &cb), dz_opt.out);
    }
  });

  // gram
  auto* gm = app.add_subcommand("gram", "compute the full kernel matrix of a discrete dataset");
  struct {
    std::string discrete, out;
    KernelFlags kf;
    int threads = 0;
  } gm_opt;
  gm->add_option("--discrete", gm_opt.discrete, "discretized dataset file")->required();
  add_kernel_flags(gm, gm_opt.kf);
  gm->add_option("--threads", gm_opt.threads);
  gm->add_option("--out", gm_opt.out)->required();
  gm->callback([&] {
    apply_threads(gm_opt.threads);
    auto data = load_discrete(gm_opt.discrete);
    KernelSpec spec = kernel_from_flags(gm_opt.kf, data[0].alphabet_min == 1);
    spec.alphabet_size = data[0].alphabet_size;
    spec.alphabet_min = data[0].alphabet_min;
    save_gram(compute_gram(data, spec), gm_opt.out);
  });

  // cross-gram
  auto* cgm = app.add_subcommand("cross-gram", "kernel values of test sequences against a training set");
  struct {
    std::string test, train, out;
    KernelFlags kf;
    int threads = 0;
  } cg_opt;
  cgm->add_option("--discrete-test", cg_opt.test)->required();
  cgm->add_option("--discrete-train", cg_opt.train)->required();
  add_kernel_flags(cgm, cg_opt.kf);
  cgm->add_option("--threads", cg_opt.threads);
  cgm->add_option("--out", cg_opt.out)->required();
  cgm->callback([&] {
    apply_threads(cg_opt.threads);
    auto test = load_discrete(cg_opt.test);
    auto train = load_discrete(cg_opt.train);
    KernelSpec spec = kernel_from_flags(cg_opt.kf, train[0].alphabet_min == 1);
    spec.alphabet_size = train[0].alphabet_size;
    spec.alphabet_min = train[0].alphabet_min;
    save_cross_gram(compute_cross_gram(test, train, spec), cg_opt.out);
  });

  // train
  auto* tr = app.add_subcommand("train", "train an svm (one-vs-rest beyond two classes)");
  struct {
    std::string gram, manifest, out;
    double C = 1.0, tol = 1e-3;
  } tr_opt;
  tr->add_option("--gram", tr_opt.gram)->required();
  tr->add_option("--manifest", tr_opt.manifest, "labels for the gram ids")->required();
  tr->add_option("--C", tr_opt.C);
  tr->add_option("--tol", tr_opt.tol);
  tr->add_option("--out", tr_opt.out)->required();
  tr->callback([&] {
    GramMatrix gram = load_gram(tr_opt.gram);
    auto labels = labels_by_id(tr_opt.manifest);
    std::vector<std::string> y;
    y.reserve(gram.size());
    for (const auto& id : gram.ids) {
      auto it = labels.find(id);
      if (it == labels.end()) fail(Err::MissingLabel, "no label for gram id " + id);
      y.push_back(it->second);
    }
    TrainOptions opt;
    opt.C = tr_opt.C;
    opt.tol = tr_opt.tol;
    auto models = train_ovr(gram, y, opt);
    std::set<std::string> classes(y.begin(), y.end());
    if (classes.size() == 2) {
      save_model(models[0], tr_opt.out);
    } else {
      for (const auto& m : models) save_model(m, tr_opt.out + "." + m.label_positive);
    }
  });

  // predict
  auto* pr = app.add_subcommand("predict", "score test sequences with trained models");
  struct {
    std::string cross_gram, out;
    std::vector<std::string> models;
  } pr_opt;
  pr->add_option("--cross-gram", pr_opt.cross_gram)->required();
  pr->add_option("--model", pr_opt.models, "model file; repeat for one-vs-rest")->required();
  pr->add_option("--out", pr_opt.out)->required();
  pr->callback([&] {
    CrossGram cg = load_cross_gram(pr_opt.cross_gram);
    std::ostringstream out;
    out << "id\tpredicted\tscore\n";
    if (pr_opt.models.size() == 1) {
      SvmModel model = load_model(pr_opt.models[0]);
      for (std::size_t i = 0; i < cg.test_ids.size(); ++i) {
        auto [score, label] = predict(model, cg.values[i], cg.train_ids);
        out << cg.test_ids[i] << '\t' << label << '\t' << fmt_real(score) << "\n";
      }
    } else {
      std::vector<SvmModel> models;
      for (const auto& path : pr_opt.models) models.push_back(load_model(path));
      OvrClassifier clf = OvrClassifier::make(std::move(models), cg.train_ids);
      for (std::size_t i = 0; i < cg.test_ids.size(); ++i) {
        auto scores = clf.scores(cg.values[i]);
        std::size_t best = 0;
        for (std::size_t m = 1; m < scores.size(); ++m)
          if (scores[m] > scores[best] ||
              (scores[m] == scores[best] &&
               clf.models[m].label_positive < clf.models[best].label_positive))
            best = m;
        out << cg.test_ids[i] << '\t' << clf.models[best].label_positive << '\t'
            << fmt_real(scores[best]) << "\n";
      }
    }
    write_file(pr_opt.out, out.str());
  });

  // cv
  auto* cv = app.add_subcommand("cv", "cross-validate the full pipeline");
  struct {
    std::string manifest, out, dump, quantizer = "uniform";
    int bins = 32, codewords = 2048, iters = 100, folds = 5, threads = 0;
    double C = 1.0, tol = 1e-3;
    std::uint64_t seed = 1;
    bool group_cv = false;
    KernelFlags kf;
  } cv_opt;
  cv->add_option("--manifest", cv_opt.manifest)->required();
  cv->add_option("--quantizer", cv_opt.quantizer, "uniform|kmeans|vq")
      ->check(CLI::IsMember({"uniform", "kmeans", "vq"}));
  cv->add_option("--bins", cv_opt.bins);
  cv->add_option("--codebook-size", cv_opt.codewords);
  cv->add_option("--fit-iters", cv_opt.iters);
  add_kernel_flags(cv, cv_opt.kf);
  cv->add_option("--C", cv_opt.C);
  cv->add_option("--tol", cv_opt.tol);
  cv->add_option("--folds", cv_opt.folds);
  cv->add_option("--seed", cv_opt.seed);
  cv->add_flag("--group-cv", cv_opt.group_cv, "hold out whole groups instead of stratifying");
  cv->add_option("--threads", cv_opt.threads);
  cv->add_option("--out", cv_opt.out)->required();
  cv->add_option("--dump-predictions", cv_opt.dump, "also write per-sequence predictions");
  cv->callback([&] {
    apply_threads(cv_opt.threads);
    auto data = ingest_csv(cv_opt.manifest);
    PipelineConfig config;
    config.quantizer = cv_opt.quantizer == "uniform" ? PipelineConfig::Quantizer::uniform
                       : cv_opt.quantizer == "kmeans" ? PipelineConfig::Quantizer::kmeans
                                                      : PipelineConfig::Quantizer::vq;
    config.bins = cv_opt.bins;
    config.codebook_size = cv_opt.codewords;
    config.fit_iters = cv_opt.iters;
    config.kernel =
        kernel_from_flags(cv_opt.kf, config.quantizer == PipelineConfig::Quantizer::vq);
    config.C = cv_opt.C;
    config.tol = cv_opt.tol;

    std::vector<FoldResult> folds;
    EvalReport rep = cross_validate(data, config, cv_opt.folds, cv_opt.seed, cv_opt.group_cv,
                                    cv_opt.dump.empty() ? nullptr : &folds);
    write_report(rep, cv_opt.out);
    if (!cv_opt.dump.empty()) {
      std::vector<std::string> predicted(data.size());
      std::vector<double> score(data.size());
      for (const auto& fr : folds)
        for (std::size_t i = 0; i < fr.test_indices.size(); ++i) {
          predicted[fr.test_indices[i]] = fr.predicted[i];
          score[fr.test_indices[i]] = fr.binary_scores[i];
        }
      std::ostringstream out;
      out << "id\ttruth\tpredicted\tscore\n";
      for (std::size_t i = 0; i < data.size(); ++i)
        out << data[i].id << '\t' << data[i].label << '\t' << predicted[i] << '\t'
            << fmt_real(score[i]) << "\n";
      write_file(cv_opt.dump, out.str());
    }
  });

  // eval-roc50
  auto* er = app.add_subcommand("eval-roc50", "roc50 of a score file");
  struct {
    std::string predictions, positive;
  } er_opt;
  er->add_option("--predictions", er_opt.predictions, "TSV rows: id<TAB>score<TAB>label")
      ->required();
  er->add_option("--positive", er_opt.positive, "label counted as positive")->required();
  er->callback([&] {
    auto lines = read_lines(er_opt.predictions);
    std::vector<double> scores;
    std::vector<int> labels;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      std::string where = er_opt.predictions + ":" + std::to_string(i + 1);
      auto toks = split(lines[i], '\t');
      if (toks.size() != 3)
        fail(Err::MalformedFile, where + ": expected id<TAB>score<TAB>label");
      scores.push_back(parse_real(toks[1], where));
      labels.push_back(toks[2] == er_opt.positive ? 1 : -1);
    }
    double value = roc50(scores, labels);
    std::cout << "roc50\t" << fmt_real(value) << "\n";
  });

  // synth
  auto* sy = app.add_subcommand("synth", "generate the synthetic AR(1) benchmark corpus");
  struct {
    std::string out_dir;
    int classes = 3, per_class = 20, dims = 3, length = 300, groups = 0;
    std::uint64_t seed = 1;
  } sy_opt;
  sy->add_option("--out-dir", sy_opt.out_dir)->required();
  sy->add_option("--classes", sy_opt.classes);
  sy->add_option("--per-class", sy_opt.per_class);
  sy->add_option("--dims", sy_opt.dims);
  sy->add_option("--length", sy_opt.length);
  sy->add_option("--groups-per-class", sy_opt.groups);
  sy->add_option("--seed", sy_opt.seed);
  sy->callback([&] {
    auto data = make_synth(sy_opt.classes, sy_opt.per_class, sy_opt.dims, sy_opt.length,
                           sy_opt.seed, sy_opt.groups);
    std::cout << write_synth(sy_opt.out_dir, data) << "\n";
  });

  // selftest
  auto* st = app.add_subcommand("selftest", "run the built-in oracle and property checks");
  st->callback([&] { exit_code = run_selftest(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
