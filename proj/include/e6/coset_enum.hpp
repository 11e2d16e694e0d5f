#pragma once

#include <cstddef>
#include <vector>

namespace e6 {

// Todd-Coxeter enumeration (HLT strategy with coincidence processing) of the
// cosets of the trivial subgroup of <g_1..g_n | relators>.  Letters are +k
// and -k as in Word.  Returns the group order, or 0 when more than
// max_cosets cosets would be needed.
std::size_t enumerate_cosets(int ngens, const std::vector<std::vector<int>>& relators, std::size_t max_cosets);

}  // namespace e6
