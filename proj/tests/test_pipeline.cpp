#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "doctest.h"
#include "mvdfq/cv.hpp"
#include "mvdfq/synth.hpp"
#include "mvdfq/textio.hpp"

using namespace mvdfq;

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + MVDFQ_CLI_PATH + "\" " + args;
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

std::string slurp(const std::string& path) {
  std::string all;
  for (const auto& line : read_lines(path)) {
    all += line;
    all += '\n';
  }
  return all;
}

std::map<std::string, std::string> report_map(const std::string& path) {
  std::map<std::string, std::string> kv;
  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    auto cols = split(line, '\t');
    REQUIRE(cols.size() == 2);
    kv[cols[0]] = cols[1];
  }
  return kv;
}

void reset_dir(const std::string& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
}

}  // namespace

TEST_CASE("selftest subcommand passes") {
  reset_dir("cli_tmp_selftest");
  CHECK(run_cli("selftest > cli_tmp_selftest/out.txt") == 0);
  auto text = slurp("cli_tmp_selftest/out.txt");
  CHECK(text.find("ok ") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("synth plus cv writes a deterministic report") {
  const std::string dir = "cli_tmp_cv";
  reset_dir(dir);
  REQUIRE(run_cli("synth --out-dir " + dir + "/data --classes 2 --per-class 4 --dims 2"
                  " --length 60 --seed 5 > " + dir + "/synth_out.txt") == 0);
  auto manifest = dir + "/data/manifest.tsv";
  CHECK(slurp(dir + "/synth_out.txt").find("manifest.tsv") != std::string::npos);

  std::string cv_args = "cv --manifest " + manifest +
                        " --quantizer uniform --bins 8 --kernel spectrum --k 2"
                        " --folds 2 --seed 9 --C 1.0 --tol 0.001";
  REQUIRE(run_cli(cv_args + " --out " + dir + "/rep1.tsv --dump-predictions " + dir +
                  "/dump1.tsv") == 0);
  REQUIRE(run_cli(cv_args + " --out " + dir + "/rep2.tsv --dump-predictions " + dir +
                  "/dump2.tsv") == 0);

  CHECK(slurp(dir + "/rep1.tsv") == slurp(dir + "/rep2.tsv"));
  CHECK(slurp(dir + "/dump1.tsv") == slurp(dir + "/dump2.tsv"));

  auto rep = report_map(dir + "/rep1.tsv");
  REQUIRE(rep.count("error_rate") == 1);
  REQUIRE(rep.count("macro_f1") == 1);
  REQUIRE(rep.count("roc50") == 1);  // two classes
  double err = parse_real(rep["error_rate"], "report");
  CHECK(err >= 0.0);
  CHECK(err <= 1.0);

  auto dump = read_lines(dir + "/dump1.tsv");
  REQUIRE(dump.size() >= 2);
  CHECK(dump[0] == "id\ttruth\tpredicted\tscore");
  CHECK(static_cast<int>(dump.size()) == 1 + 2 * 4);
}

TEST_CASE("cv predictions match a manually driven single fold") {
  const std::string dir = "cli_tmp_manual";
  reset_dir(dir);
  auto data = make_synth(2, 4, 2, 60, 5);
  auto manifest = write_synth(dir + "/data", data);

  // the same plan cv derives internally for this seed
  auto plan = make_stratified_folds(data, 2, 9);
  std::string train_tsv, test_tsv;
  std::vector<std::string> test_ids;
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::string line = data[i].id + "\t" + data[i].label + "\t" + data[i].group + "\t" +
                       data[i].id + ".csv\n";
    if (plan.assignment[i] == 0) {
      test_tsv += line;
      test_ids.push_back(data[i].id);
    } else {
      train_tsv += line;
    }
  }
  write_file(dir + "/data/train.tsv", train_tsv);
  write_file(dir + "/data/test.tsv", test_tsv);

  const std::string kflags = " --kernel spectrum --k 2";
  REQUIRE(run_cli("fit-quantizer --manifest " + dir + "/data/train.tsv --quantizer uniform"
                  " --bins 8 --out " + dir + "/q.txt") == 0);
  REQUIRE(run_cli("discretize --manifest " + dir + "/data/train.tsv --quantizer-file " + dir +
                  "/q.txt --out " + dir + "/train.disc") == 0);
  REQUIRE(run_cli("discretize --manifest " + dir + "/data/test.tsv --quantizer-file " + dir +
                  "/q.txt --out " + dir + "/test.disc") == 0);
  REQUIRE(run_cli("gram --discrete " + dir + "/train.disc" + kflags + " --out " + dir +
                  "/g.tsv") == 0);
  REQUIRE(run_cli("train --gram " + dir + "/g.tsv --manifest " + dir + "/data/train.tsv"
                  " --C 1.0 --tol 0.001 --out " + dir + "/model.tsv") == 0);
  REQUIRE(run_cli("cross-gram --discrete-test " + dir + "/test.disc --discrete-train " + dir +
                  "/train.disc" + kflags + " --out " + dir + "/cg.tsv") == 0);
  REQUIRE(run_cli("predict --cross-gram " + dir + "/cg.tsv --model " + dir +
                  "/model.tsv --out " + dir + "/pred.tsv") == 0);

  REQUIRE(run_cli("cv --manifest " + manifest + " --quantizer uniform --bins 8" + kflags +
                  " --folds 2 --seed 9 --C 1.0 --tol 0.001 --out " + dir +
                  "/rep.tsv --dump-predictions " + dir + "/dump.tsv") == 0);

  std::map<std::string, std::pair<std::string, std::string>> dumped;  // id -> (pred, score)
  auto dump_lines = read_lines(dir + "/dump.tsv");
  for (std::size_t i = 1; i < dump_lines.size(); ++i) {
    if (dump_lines[i].empty()) continue;
    auto cols = split(dump_lines[i], '\t');
    REQUIRE(cols.size() == 4);
    dumped[cols[0]] = {cols[2], cols[3]};
  }

  auto pred_lines = read_lines(dir + "/pred.tsv");
  REQUIRE(pred_lines.size() >= 2);
  CHECK(pred_lines[0] == "id\tpredicted\tscore");
  std::size_t compared = 0;
  for (std::size_t i = 1; i < pred_lines.size(); ++i) {
    if (pred_lines[i].empty()) continue;
    auto cols = split(pred_lines[i], '\t');
    REQUIRE(cols.size() == 3);
    REQUIRE(dumped.count(cols[0]) == 1);
    CHECK(dumped[cols[0]].first == cols[1]);
    CHECK(dumped[cols[0]].second == cols[2]);
    ++compared;
  }
  CHECK(compared == test_ids.size());
}

TEST_CASE("gram output does not depend on the thread count") {
  const std::string dir = "cli_tmp_threads";
  reset_dir(dir);
  auto data = make_synth(2, 5, 3, 50, 31);
  write_synth(dir + "/data", data);
  write_file(dir + "/data/all.tsv", slurp(dir + "/data/manifest.tsv"));

  REQUIRE(run_cli("fit-quantizer --manifest " + dir + "/data/all.tsv --bins 8 --out " + dir +
                  "/q.txt") == 0);
  REQUIRE(run_cli("discretize --manifest " + dir + "/data/all.tsv --quantizer-file " + dir +
                  "/q.txt --out " + dir + "/all.disc") == 0);
  REQUIRE(run_cli("gram --discrete " + dir + "/all.disc --kernel mismatch --k 3 --m 1"
                  " --manifold --normalize --threads 1 --out " + dir + "/g1.tsv") == 0);
  REQUIRE(run_cli("gram --discrete " + dir + "/all.disc --kernel mismatch --k 3 --m 1"
                  " --manifold --normalize --threads 3 --out " + dir + "/g3.tsv") == 0);
  CHECK(slurp(dir + "/g1.tsv") == slurp(dir + "/g3.tsv"));
}

TEST_CASE("eval-roc50 subcommand") {
  const std::string dir = "cli_tmp_roc";
  reset_dir(dir);
  write_file(dir + "/p.tsv", "a\t4\tpos\nb\t3\tpos\nc\t2\tneg\nd\t1\tneg\n");
  REQUIRE(run_cli("eval-roc50 --predictions " + dir + "/p.tsv --positive pos > " + dir +
                  "/out.txt") == 0);
  CHECK(slurp(dir + "/out.txt") == "roc50\t1\n");

  write_file(dir + "/q.tsv", "a\t4\tpos\nb\t3\tneg\nc\t2\tpos\nd\t1\tneg\n");
  REQUIRE(run_cli("eval-roc50 --predictions " + dir + "/q.tsv --positive pos > " + dir +
                  "/out2.txt") == 0);
  CHECK(slurp(dir + "/out2.txt") == "roc50\t0.75\n");
}

TEST_CASE("bad invocations exit nonzero with an error message") {
  const std::string dir = "cli_tmp_err";
  reset_dir(dir);
  CHECK(run_cli("gram --no-such-flag 2> " + dir + "/e1.txt") != 0);
  CHECK(run_cli("cv --manifest " + dir + "/missing.tsv --out " + dir + "/r.tsv 2> " + dir +
                "/e2.txt") != 0);
  CHECK(slurp(dir + "/e2.txt").find("error:") != std::string::npos);
  CHECK(run_cli("2> " + dir + "/e3.txt") != 0);  // a subcommand is required
}
