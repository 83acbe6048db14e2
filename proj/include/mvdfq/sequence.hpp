#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mvdfq {

using Symbol = std::uint32_t;

// R x n real-valued feature matrix: values[r][i] = feature dimension r at
// position i. All entries finite after ingestion.
struct Sequence {
  std::string id;
  std::string label;
  std::string group;  // optional grouping key, "" = none
  std::vector<std::vector<double>> values;

  std::size_t dims() const { return values.size(); }
  std::size_t length() const { return values.empty() ? 0 : values[0].size(); }
};

// Discrete counterpart of a Sequence: R rows of symbols. DFQ rows run over
// {0..B+1} (0 and B+1 are the out-of-range sentinels); VQ output is a single
// row of 1-based codeword ids. alphabet_size is the number of valid symbols
// and alphabet_min the smallest one, so valid symbols are
// [alphabet_min, alphabet_min + alphabet_size).
struct DiscreteSequence {
  std::string id;
  std::string label;
  std::string group;
  Symbol alphabet_size = 0;
  Symbol alphabet_min = 0;
  std::vector<std::vector<Symbol>> rows;

  std::size_t dims() const { return rows.size(); }
  std::size_t length() const { return rows.empty() ? 0 : rows[0].size(); }
};

}  // namespace mvdfq
