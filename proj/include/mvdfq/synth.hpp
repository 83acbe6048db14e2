#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvdfq/sequence.hpp"

namespace mvdfq {

// Class c, dimension r follows the AR(1) process
//   x_0 = e_0,  x_t = phi * x_{t-1} + e_t,  e_t ~ N(0, 1)
// with phi = kSynthCoeffs[(c + r) % 3], so every dimension separates all
// classes. Labels are "c0", "c1", ...; ids "c<class>s<index>". When
// groups_per_class > 0, groups are "g<class>_<index % groups_per_class>".
extern const double kSynthCoeffs[3];

std::vector<Sequence> make_synth(int classes, int per_class, int dims, int length,
                                 std::uint64_t seed, int groups_per_class = 0);

// Writes one CSV per sequence plus manifest.tsv into dir (created if needed);
// returns the manifest path.
std::string write_synth(const std::string& dir, const std::vector<Sequence>& data);

}  // namespace mvdfq
