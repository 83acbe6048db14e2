#include "mvdfq/synth.hpp"

#include <filesystem>
#include <sstream>

#include "mvdfq/error.hpp"
#include "mvdfq/rng.hpp"
#include "mvdfq/textio.hpp"

namespace mvdfq {

const double kSynthCoeffs[3] = {0.9, -0.6, 0.15};

std::vector<Sequence> make_synth(int classes, int per_class, int dims, int length,
                                 std::uint64_t seed, int groups_per_class) {
  if (classes < 2 || per_class < 1 || dims < 1 || length < 1)
    fail(Err::InvalidParams, "need classes >= 2, per_class >= 1, dims >= 1, length >= 1");
  std::vector<Sequence> out;
  out.reserve(static_cast<std::size_t>(classes) * per_class);
  for (int c = 0; c < classes; ++c) {
    for (int s = 0; s < per_class; ++s) {
      Rng rng(derive_seed(seed, "synth", static_cast<std::uint64_t>(c) * per_class + s));
      Sequence seq;
      seq.id = "c" + std::to_string(c) + "s" + std::to_string(s);
      seq.label = "c" + std::to_string(c);
      if (groups_per_class > 0)
        seq.group = "g" + std::to_string(c) + "_" + std::to_string(s % groups_per_class);
      seq.values.assign(dims, {});
      for (int r = 0; r < dims; ++r) {
        double phi = kSynthCoeffs[(c + r) % 3];
        auto& row = seq.values[r];
        row.reserve(length);
        double x = rng.next_gauss();
        row.push_back(x);
        for (int t = 1; t < length; ++t) {
          x = phi * x + rng.next_gauss();
          row.push_back(x);
        }
      }
      out.push_back(std::move(seq));
    }
  }
  return out;
}

std::string write_synth(const std::string& dir, const std::vector<Sequence>& data) {
  std::filesystem::create_directories(dir);
  std::ostringstream manifest;
  for (const auto& seq : data) {
    std::string name = seq.id + ".csv";
    std::ostringstream csv;
    for (std::size_t t = 0; t < seq.length(); ++t) {
      for (std::size_t r = 0; r < seq.dims(); ++r)
        csv << (r ? "," : "") << fmt_real(seq.values[r][t]);
      csv << "\n";
    }
    write_file(dir + "/" + name, csv.str());
    manifest << seq.id << '\t' << seq.label << '\t' << seq.group << '\t' << name << "\n";
  }
  std::string manifest_path = dir + "/manifest.tsv";
  write_file(manifest_path, manifest.str());
  return manifest_path;
}

}  // namespace mvdfq
