#pragma once

#include <map>
#include <vector>

#include "mvdfq/kernel.hpp"
#include "mvdfq/sequence.hpp"

namespace mvdfq::oracle {

// Brute-force feature enumerators keyed by explicit symbol tuples. They share
// no code with the sparse implementations: mismatch scans the whole alphabet
// power set Sigma^k and sssk walks all position tuples.

using FeatureMap = std::map<std::vector<Symbol>, double>;

FeatureMap brute_spectrum(const std::vector<Symbol>& row, int k);

FeatureMap brute_mismatch(const std::vector<Symbol>& row, int k, int m, Symbol alphabet_size,
                          Symbol alphabet_min = 0);

// keys are (a1, d1, a2) or (a1, d1, a2, d2, a3) with real gap values
FeatureMap brute_sssk(const std::vector<Symbol>& row, int t, int d);

double dot(const FeatureMap& a, const FeatureMap& b);

// Decodes a packed FeatureVector into tuple space using the documented id
// encoding, so it can be compared against the brute maps.
FeatureMap decode(const FeatureVector& fv, const KernelSpec& spec);

}  // namespace mvdfq::oracle
