#pragma once

#include "tsr/complex.hpp"
#include "tsr/field.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tsr {

// A chain with F_p coefficients over the simplices of one complex, stored as
// (simplex id, coefficient) pairs sorted by id. No zero coefficients are
// kept; the zero chain has no terms.
struct chain {
    int dim = 0;
    std::vector<std::pair<int, std::uint32_t>> terms;

    bool zero() const { return terms.empty(); }
    bool operator==(const chain&) const = default;
};

// Standard simplicial boundary with alternating signs reduced mod p; the
// empty chain for vertices.
chain boundary_chain(const simplicial_complex& K, int id, const field_spec& F);
chain boundary_chain(const simplicial_complex& K, const simplex& s, const field_spec& F);

bool is_cycle(const simplicial_complex& K, const field_spec& F, const chain& c);

// Cycle literal: "c1*[v...] + c2*[v...] - [v...]" with integer coefficients
// reduced mod p; e.g. "[1] - [0]" or "[0,1] + [1,2] + [0,2]".
chain parse_cycle(const simplicial_complex& K, const field_spec& F, const std::string& text);

std::string format_chain(const simplicial_complex& K, const chain& c);

} // namespace tsr
