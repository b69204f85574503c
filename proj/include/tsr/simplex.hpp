#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace tsr {

// A simplex in canonical form: a strictly increasing, nonempty list of
// non-negative vertex ids. Two simplices are equal iff their vertex lists are.
struct simplex {
    std::vector<int> verts;

    simplex() = default;
    simplex(std::initializer_list<int> vs);
    explicit simplex(std::vector<int> vs);

    int dim() const { return static_cast<int>(verts.size()) - 1; }

    bool has_face(const simplex& other) const; // other ⊆ this
    std::vector<simplex> facets() const;       // codimension-1 faces

    bool operator==(const simplex& other) const { return verts == other.verts; }
};

// Canonical order: by dimension, then lexicographically on vertices.
bool canonical_less(const simplex& a, const simplex& b);

inline bool operator<(const simplex& a, const simplex& b) { return canonical_less(a, b); }

// "[v0,v1,...]"
std::string format_simplex(const simplex& s);

// Parses "[0,1,2]"; spaces around vertices are allowed.
simplex parse_simplex(const std::string& text);

} // namespace tsr
