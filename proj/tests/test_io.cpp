#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "mvdfq/dataset.hpp"
#include "mvdfq/discrete_io.hpp"
#include "mvdfq/synth.hpp"
#include "mvdfq/textio.hpp"
#include "test_util.hpp"

using namespace mvdfq;
using testutil::make_discrete;
using testutil::thrown_kind;

namespace fs = std::filesystem;

namespace {

struct TmpDir {
  std::string path;
  explicit TmpDir(std::string p) : path(std::move(p)) { fs::create_directories(path); }
  ~TmpDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return path + "/" + name; }
};

}  // namespace

TEST_CASE("text helpers") {
  CHECK(split("a,,b", ',') == std::vector<std::string>{"a", "", "b"});
  CHECK(split("", ',') == std::vector<std::string>{""});
  CHECK(split("x", ',') == std::vector<std::string>{"x"});

  double pi = 3.14159265358979312;
  CHECK(parse_real(fmt_real(pi), "t") == pi);
  CHECK(parse_real(fmt_real(0.1), "t") == 0.1);
  CHECK(parse_int("-42", "t") == -42);
  CHECK(thrown_kind([] { parse_int("12x", "t"); }) == Err::MalformedFile);
  CHECK(thrown_kind([] { parse_real("", "t"); }) == Err::MalformedFile);
  CHECK(thrown_kind([] { parse_real("1e999", "t"); }) == Err::MalformedFile);
  CHECK(thrown_kind([] { read_lines("no_such_file_anywhere.txt"); }) == Err::IoError);
}

TEST_CASE("manifest parsing and path resolution") {
  TmpDir tmp("io_tmp_manifest");
  write_file(tmp.file("m.tsv"), "s1\tpos\tg1\ta.csv\ns2\tneg\t\tb.csv\n");
  auto rows = load_manifest(tmp.file("m.tsv"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].id == "s1");
  CHECK(rows[0].label == "pos");
  CHECK(rows[0].group == "g1");
  CHECK(rows[0].path == tmp.file("a.csv"));
  CHECK(rows[1].group == "");
  CHECK(rows[1].path == tmp.file("b.csv"));

  write_file(tmp.file("short.tsv"), "s1\tpos\n");
  CHECK(thrown_kind([&] { load_manifest(tmp.file("short.tsv")); }) == Err::MalformedFile);
  write_file(tmp.file("nolabel.tsv"), "s1\t\tg\ta.csv\n");
  CHECK(thrown_kind([&] { load_manifest(tmp.file("nolabel.tsv")); }) == Err::MissingLabel);
  write_file(tmp.file("noid.tsv"), "\tpos\tg\ta.csv\n");
  CHECK(thrown_kind([&] { load_manifest(tmp.file("noid.tsv")); }) == Err::MalformedFile);
  write_file(tmp.file("dup.tsv"), "s1\tpos\t\ta.csv\ns1\tneg\t\tb.csv\n");
  CHECK(thrown_kind([&] { load_manifest(tmp.file("dup.tsv")); }) == Err::DuplicateId);
  write_file(tmp.file("empty.tsv"), "");
  CHECK(thrown_kind([&] { load_manifest(tmp.file("empty.tsv")); }) == Err::EmptyDataset);
}

TEST_CASE("csv ingestion transposes time-major data") {
  TmpDir tmp("io_tmp_csv");
  write_file(tmp.file("m.tsv"), "s1\tpos\tg\ts1.csv\n");
  write_file(tmp.file("s1.csv"), "1.0,2.0\n3.0,4.0\n");
  auto data = ingest_csv(tmp.file("m.tsv"));
  REQUIRE(data.size() == 1);
  CHECK(data[0].id == "s1");
  CHECK(data[0].label == "pos");
  CHECK(data[0].group == "g");
  REQUIRE(data[0].dims() == 2);
  CHECK(data[0].values[0] == std::vector<double>{1.0, 3.0});
  CHECK(data[0].values[1] == std::vector<double>{2.0, 4.0});

  write_file(tmp.file("s1.csv"), "1.0,2.0\n3.0\n");
  CHECK(thrown_kind([&] { ingest_csv(tmp.file("m.tsv")); }) == Err::InconsistentColumns);
  write_file(tmp.file("s1.csv"), "abc,1.0\n");
  CHECK(thrown_kind([&] { ingest_csv(tmp.file("m.tsv")); }) == Err::NonNumericCell);
  write_file(tmp.file("s1.csv"), "nan,1.0\n");
  CHECK(thrown_kind([&] { ingest_csv(tmp.file("m.tsv")); }) == Err::NaNOrInf);
  write_file(tmp.file("s1.csv"), "");
  CHECK(thrown_kind([&] { ingest_csv(tmp.file("m.tsv")); }) == Err::MalformedFile);

  // column counts must agree across the whole dataset
  write_file(tmp.file("m2.tsv"), "s1\tpos\t\ts1.csv\ns2\tpos\t\ts2.csv\n");
  write_file(tmp.file("s1.csv"), "1.0,2.0\n");
  write_file(tmp.file("s2.csv"), "1.0\n");
  CHECK(thrown_kind([&] { ingest_csv(tmp.file("m2.tsv")); }) == Err::InconsistentColumns);
}

TEST_CASE("blosum62 table is the symmetric canonical matrix") {
  const auto& b = blosum62();
  REQUIRE(kResidues.size() == 20);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) CHECK(b[i][j] == b[j][i]);
  const double diag[20] = {4, 5, 6, 6, 9, 5, 5, 6, 8, 4, 4, 5, 5, 6, 7, 4, 5, 11, 7, 4};
  for (int i = 0; i < 20; ++i) CHECK(b[i][i] == diag[i]);
}

TEST_CASE("fasta ingestion expands residues to blosum columns") {
  TmpDir tmp("io_tmp_fasta");
  write_file(tmp.file("p.fa"), ">s1 some description\nAC\n>s2\nGG\nG\n");
  write_file(tmp.file("l.tsv"), "s1\tpos\tgA\ns2\tneg\n");
  auto data = ingest_fasta(tmp.file("p.fa"), tmp.file("l.tsv"));
  REQUIRE(data.size() == 2);
  CHECK(data[0].id == "s1");
  CHECK(data[0].label == "pos");
  CHECK(data[0].group == "gA");
  REQUIRE(data[0].dims() == 20);
  REQUIRE(data[0].length() == 2);
  const auto& b = blosum62();
  for (int r = 0; r < 20; ++r) {
    CHECK(data[0].values[r][0] == b[r][0]);  // A is residue 0
    CHECK(data[0].values[r][1] == b[r][4]);  // C is residue 4
  }
  CHECK(data[1].length() == 3);  // wrapped record lines concatenate

  // X maps to the zero column
  write_file(tmp.file("x.fa"), ">s1\nAXA\n");
  write_file(tmp.file("xl.tsv"), "s1\tpos\n");
  auto xd = ingest_fasta(tmp.file("x.fa"), tmp.file("xl.tsv"));
  for (int r = 0; r < 20; ++r) CHECK(xd[0].values[r][1] == 0.0);

  write_file(tmp.file("bad.fa"), ">s1\nAJA\n");
  CHECK(thrown_kind([&] { ingest_fasta(tmp.file("bad.fa"), tmp.file("xl.tsv")); }) ==
        Err::UnknownResidue);
  write_file(tmp.file("nolab.fa"), ">other\nAA\n");
  CHECK(thrown_kind([&] { ingest_fasta(tmp.file("nolab.fa"), tmp.file("xl.tsv")); }) ==
        Err::MissingLabel);
  write_file(tmp.file("headless.fa"), "AA\n>s1\nAA\n");
  CHECK(thrown_kind([&] { ingest_fasta(tmp.file("headless.fa"), tmp.file("xl.tsv")); }) ==
        Err::MalformedFile);

  // an empty record stays in the dataset as a zero-length sequence
  write_file(tmp.file("gap.fa"), ">s1\n>s2\nAA\n");
  write_file(tmp.file("gl.tsv"), "s1\tpos\ns2\tneg\n");
  auto gd = ingest_fasta(tmp.file("gap.fa"), tmp.file("gl.tsv"));
  REQUIRE(gd.size() == 2);
  CHECK(gd[0].dims() == 20);
  CHECK(gd[0].length() == 0);
}

TEST_CASE("discrete files round-trip") {
  TmpDir tmp("io_tmp_discrete");
  std::vector<DiscreteSequence> data;
  data.push_back(make_discrete("a", {{1, 2, 3}, {0, 5, 0}}, 6));
  data.push_back(make_discrete("b", {{}, {}}, 6));
  data[0].label = "pos";
  data[0].group = "g1";
  data[1].label = "neg";

  save_discrete(data, tmp.file("d.tsv"));
  auto back = load_discrete(tmp.file("d.tsv"));
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].id == data[i].id);
    CHECK(back[i].label == data[i].label);
    CHECK(back[i].group == data[i].group);
    CHECK(back[i].alphabet_size == data[i].alphabet_size);
    CHECK(back[i].alphabet_min == data[i].alphabet_min);
    CHECK(back[i].rows == data[i].rows);
  }

  // 1-based alphabets survive the round trip
  std::vector<DiscreteSequence> vq;
  vq.push_back(make_discrete("v", {{1, 4, 2}}, 4, 1));
  vq[0].label = "x";
  save_discrete(vq, tmp.file("v.tsv"));
  auto vback = load_discrete(tmp.file("v.tsv"));
  CHECK(vback[0].alphabet_min == 1);
  CHECK(vback[0].rows == vq[0].rows);

  write_file(tmp.file("oob.tsv"),
             "discrete v1 N=1 R=1 alphabet=4 first=0\nseq\ta\tpos\t\tn=1\n99\n");
  CHECK(thrown_kind([&] { load_discrete(tmp.file("oob.tsv")); }) == Err::SymbolOutOfRange);
  write_file(tmp.file("trunc.tsv"), "discrete v1 N=1 R=2 alphabet=4 first=0\nseq\ta\tpos\t\tn=1\n1\n");
  CHECK(thrown_kind([&] { load_discrete(tmp.file("trunc.tsv")); }) == Err::MalformedFile);
}

TEST_CASE("synthetic generator is deterministic and round-trips through csv") {
  auto a = make_synth(3, 2, 2, 50, 7, 2);
  auto b = make_synth(3, 2, 2, 50, 7, 2);
  REQUIRE(a.size() == 6);
  CHECK(a[0].id == "c0s0");
  CHECK(a[5].id == "c2s1");
  CHECK(a[0].label == "c0");
  CHECK(a[5].label == "c2");
  CHECK(a[0].group == "g0_0");
  CHECK(a[1].group == "g0_1");
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].dims() == 2);
    CHECK(a[i].length() == 50);
    CHECK(a[i].values == b[i].values);
  }
  auto c = make_synth(3, 2, 2, 50, 8, 2);
  CHECK(a[0].values != c[0].values);

  TmpDir tmp("io_tmp_synth");
  auto manifest = write_synth(tmp.path, a);
  auto back = ingest_csv(manifest);
  REQUIRE(back.size() == a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(back[i].id == a[i].id);
    CHECK(back[i].label == a[i].label);
    CHECK(back[i].group == a[i].group);
    CHECK(back[i].values == a[i].values);
  }

  CHECK(thrown_kind([] { make_synth(0, 2, 2, 50, 7); }) == Err::InvalidParams);
  CHECK(thrown_kind([] { make_synth(2, 2, 2, 0, 7); }) == Err::InvalidParams);
}
