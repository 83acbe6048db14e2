#pragma once

#include <string>
#include <vector>

#include "mvdfq/sequence.hpp"

namespace mvdfq {

// Text format: `discrete v1 N=<int> R=<int> alphabet=<size> first=<min>`,
// then per sequence a `seq<TAB>id<TAB>label<TAB>group<TAB>n=<len>` line
// followed by R lines of space-separated symbols.
void save_discrete(const std::vector<DiscreteSequence>& data, const std::string& path);
std::vector<DiscreteSequence> load_discrete(const std::string& path);

}  // namespace mvdfq
