#pragma once

#include "tsr/filtration.hpp"

#include <vector>

namespace tsr {

// Produces an injective filtration g with ‖f−g‖∞ ≤ ε and g(s2) < g(s1) by
// raising the upper set of s1 and lowering the lower set of s2. Requires
// s1, s2 of equal dimension with f(s1) < f(s2) < f(s1) + 2ε.
filtration switch_pair(const filtration& f, const simplex& s1, const simplex& s2, const rat& eps);

// Realizes an arbitrary permutation pi (0-based indices) of an f-increasing,
// single-dimension block of simplices within ‖f−g‖∞ ≤ ε, by equal subdivision
// of the overlap interval plus upper/lower shifts. The block must satisfy
// f(last) < f(first) + 2ε.
filtration permute_block(const filtration& f, const std::vector<simplex>& block,
                         const std::vector<int>& pi, const rat& eps);

} // namespace tsr
