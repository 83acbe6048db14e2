#include "mvdfq/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <map>
#include <set>

#include "mvdfq/error.hpp"
#include "mvdfq/textio.hpp"

namespace mvdfq {

namespace {

std::string dir_of(const std::string& path) {
  std::size_t pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string() : path.substr(0, pos + 1);
}

std::string resolve(const std::string& base_dir, const std::string& path) {
  if (path.empty() || path[0] == '/') return path;
  return base_dir + path;
}

}  // namespace

std::vector<ManifestRow> load_manifest(const std::string& path) {
  auto lines = read_lines(path);
  std::string base = dir_of(path);
  std::vector<ManifestRow> rows;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::string where = path + ":" + std::to_string(i + 1);
    auto toks = split(lines[i], '\t');
    if (toks.size() != 4)
      fail(Err::MalformedFile, where + ": expected id<TAB>label<TAB>group<TAB>path");
    if (toks[0].empty()) fail(Err::MalformedFile, where + ": empty id");
    if (toks[1].empty()) fail(Err::MissingLabel, where + ": empty label for id " + toks[0]);
    if (toks[3].empty()) fail(Err::MalformedFile, where + ": empty path");
    if (!seen.insert(toks[0]).second) fail(Err::DuplicateId, where + ": duplicate id " + toks[0]);
    rows.push_back({toks[0], toks[1], toks[2], resolve(base, toks[3])});
  }
  if (rows.empty()) fail(Err::EmptyDataset, path + ": manifest lists no sequences");
  return rows;
}

std::vector<Sequence> ingest_csv(const std::string& manifest_path) {
  auto rows = load_manifest(manifest_path);
  std::vector<Sequence> out;
  std::size_t r_dims = 0;
  for (const auto& row : rows) {
    auto lines = read_lines(row.path);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) fail(Err::MalformedFile, row.path + ": empty sequence file");

    Sequence seq;
    seq.id = row.id;
    seq.label = row.label;
    seq.group = row.group;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      std::string where = row.path + ":" + std::to_string(i + 1);
      auto cells = split(lines[i], ',');
      if (seq.values.empty()) {
        if (r_dims == 0) r_dims = cells.size();
        seq.values.resize(r_dims);
      }
      if (cells.size() != r_dims)
        fail(Err::InconsistentColumns, where + ": " + std::to_string(cells.size()) +
                                           " columns, expected " + std::to_string(r_dims));
      for (std::size_t c = 0; c < cells.size(); ++c) {
        double v;
        try {
          v = parse_real(cells[c], where);
        } catch (const Error&) {
          fail(Err::NonNumericCell, where + ": cell '" + cells[c] + "' is not a number");
        }
        if (!std::isfinite(v))
          fail(Err::NaNOrInf, where + ": non-finite value '" + cells[c] + "'");
        seq.values[c].push_back(v);
      }
    }
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<Sequence> ingest_fasta(const std::string& fasta_path,
                                   const std::string& labels_path) {
  std::map<std::string, std::pair<std::string, std::string>> labels;  // id -> (label, group)
  auto label_lines = read_lines(labels_path);
  for (std::size_t i = 0; i < label_lines.size(); ++i) {
    if (label_lines[i].empty()) continue;
    std::string where = labels_path + ":" + std::to_string(i + 1);
    auto toks = split(label_lines[i], '\t');
    if (toks.size() != 2 && toks.size() != 3)
      fail(Err::MalformedFile, where + ": expected id<TAB>label[<TAB>group]");
    if (toks[1].empty()) fail(Err::MissingLabel, where + ": empty label");
    if (!labels.emplace(toks[0], std::make_pair(toks[1], toks.size() == 3 ? toks[2] : ""))
             .second)
      fail(Err::DuplicateId, where + ": duplicate id " + toks[0]);
  }

  std::map<char, std::size_t> residue_index;
  for (std::size_t i = 0; i < kResidues.size(); ++i) residue_index[kResidues[i]] = i;
  const auto& table = blosum62();

  auto lines = read_lines(fasta_path);
  std::vector<Sequence> out;
  std::set<std::string> seen;
  Sequence current;
  bool open = false;

  auto flush = [&]() {
    if (!open) return;
    if (current.length() == 0) {
      std::cerr << "warning: sequence " << current.id << " is empty\n";
      current.values.assign(20, {});
    }
    out.push_back(std::move(current));
    current = Sequence{};
    open = false;
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::string where = fasta_path + ":" + std::to_string(i + 1);
    if (line.empty()) continue;
    if (line[0] == '>') {
      flush();
      std::string id = line.substr(1, line.find_first_of(" \t") - 1);
      if (id.empty()) fail(Err::MalformedFile, where + ": record without an id");
      if (!seen.insert(id).second) fail(Err::DuplicateId, where + ": duplicate id " + id);
      auto it = labels.find(id);
      if (it == labels.end()) fail(Err::MissingLabel, "no label for sequence " + id);
      current.id = id;
      current.label = it->second.first;
      current.group = it->second.second;
      current.values.assign(20, {});
      open = true;
      continue;
    }
    if (!open) fail(Err::MalformedFile, where + ": residues before the first '>' header");
    for (char raw : line) {
      if (std::isspace(static_cast<unsigned char>(raw))) continue;
      char res = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
      auto it = residue_index.find(res);
      if (it != residue_index.end()) {
        for (std::size_t r = 0; r < 20; ++r) current.values[r].push_back(table[it->second][r]);
        continue;
      }
      if (res == 'X' || res == 'B' || res == 'Z' || res == 'U') {
        if (res != 'X')
          std::cerr << "warning: ambiguous residue " << res << " in " << current.id
                    << " mapped to the zero vector\n";
        for (std::size_t r = 0; r < 20; ++r) current.values[r].push_back(0.0);
        continue;
      }
      fail(Err::UnknownResidue, where + ": residue '" + std::string(1, raw) + "'");
    }
  }
  flush();
  if (out.empty()) fail(Err::EmptyDataset, fasta_path + ": no sequences");
  return out;
}

}  // namespace mvdfq
