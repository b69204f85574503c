#pragma once

#include "tsr/reduction.hpp"

#include <vector>

namespace tsr {

// One interval [a, b) of the dimension-n persistence module; b is nullopt
// for essential classes.
struct bar {
    int dim = 0;
    rat a;
    level b;
    int birth_id = -1;
    std::optional<int> death_id;

    bool finite() const { return b.has_value(); }
    rat length() const { return *b - a; } // finite bars only
};

using barcode_t = std::vector<bar>;

// Bars of dimension n read off a reduction of f's own order, sorted by (a, b).
barcode_t barcode(const reduced_filtration& R, const filtration& f, int n);

std::string format_bar(const simplicial_complex& K, const bar& b);

// Exact min-max matching cost between two barcodes; unmatched bars pay half
// their length, infinite bars may only match infinite bars (a mismatch in
// their counts is an error).
rat bottleneck_distance(const barcode_t& b1, const barcode_t& b2);

} // namespace tsr
