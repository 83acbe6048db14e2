#include "mvdfq/discrete_io.hpp"

#include <sstream>

#include "mvdfq/error.hpp"
#include "mvdfq/textio.hpp"

namespace mvdfq {

void save_discrete(const std::vector<DiscreteSequence>& data, const std::string& path) {
  if (data.empty()) fail(Err::EmptyDataset, "nothing to save to " + path);
  std::ostringstream out;
  out << "discrete v1 N=" << data.size() << " R=" << data[0].dims()
      << " alphabet=" << data[0].alphabet_size << " first=" << data[0].alphabet_min << "\n";
  for (const auto& s : data) {
    if (s.dims() != data[0].dims() || s.alphabet_size != data[0].alphabet_size ||
        s.alphabet_min != data[0].alphabet_min)
      fail(Err::DimensionMismatch, "sequence " + s.id + " does not match the dataset shape");
    out << "seq\t" << s.id << '\t' << s.label << '\t' << s.group << "\tn=" << s.length() << "\n";
    for (const auto& row : s.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
      out << "\n";
    }
  }
  write_file(path, out.str());
}

std::vector<DiscreteSequence> load_discrete(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty()) fail(Err::MalformedFile, path + ": empty file");
  auto head = split(lines[0], ' ');
  if (head.size() != 6 || head[0] != "discrete" || head[1] != "v1" ||
      head[2].rfind("N=", 0) != 0 || head[3].rfind("R=", 0) != 0 ||
      head[4].rfind("alphabet=", 0) != 0 || head[5].rfind("first=", 0) != 0)
    fail(Err::MalformedFile, path + ": bad header '" + lines[0] + "'");
  long n = parse_int(head[2].substr(2), path);
  long r = parse_int(head[3].substr(2), path);
  long alphabet = parse_int(head[4].substr(9), path);
  long first = parse_int(head[5].substr(6), path);
  if (n < 1 || r < 1 || alphabet < 1 || first < 0)
    fail(Err::MalformedFile, path + ": bad header counts");

  std::vector<DiscreteSequence> out;
  out.reserve(n);
  std::size_t cursor = 1;
  for (long s = 0; s < n; ++s) {
    if (cursor >= lines.size()) fail(Err::MalformedFile, path + ": truncated file");
    std::string where = path + ":" + std::to_string(cursor + 1);
    auto toks = split(lines[cursor], '\t');
    if (toks.size() != 5 || toks[0] != "seq" || toks[4].rfind("n=", 0) != 0)
      fail(Err::MalformedFile, where + ": bad sequence line");
    long len = parse_int(toks[4].substr(2), where);
    if (len < 0) fail(Err::MalformedFile, where + ": bad length");
    ++cursor;

    DiscreteSequence seq;
    seq.id = toks[1];
    seq.label = toks[2];
    seq.group = toks[3];
    seq.alphabet_size = static_cast<Symbol>(alphabet);
    seq.alphabet_min = static_cast<Symbol>(first);
    seq.rows.resize(r);
    for (long row = 0; row < r; ++row, ++cursor) {
      if (cursor >= lines.size()) fail(Err::MalformedFile, path + ": truncated file");
      std::string rwhere = path + ":" + std::to_string(cursor + 1);
      if (len == 0) {
        if (!lines[cursor].empty()) fail(Err::MalformedFile, rwhere + ": expected empty row");
        continue;
      }
      auto syms = split(lines[cursor], ' ');
      if (syms.size() != static_cast<std::size_t>(len))
        fail(Err::MalformedFile, rwhere + ": expected " + std::to_string(len) + " symbols");
      seq.rows[row].reserve(len);
      for (const auto& t : syms) {
        long v = parse_int(t, rwhere);
        if (v < first || v - first >= alphabet)
          fail(Err::SymbolOutOfRange, rwhere + ": symbol " + t + " outside the alphabet");
        seq.rows[row].push_back(static_cast<Symbol>(v));
      }
    }
    out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace mvdfq
