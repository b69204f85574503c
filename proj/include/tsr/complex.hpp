#pragma once

#include "tsr/simplex.hpp"

#include <optional>
#include <vector>

namespace tsr {

// A finite simplicial complex, closed under faces. Simplices are indexed in
// canonical order (dimension, then lexicographic vertices); all internal
// machinery works with these integer ids.
class simplicial_complex {
public:
    // Downward closure of the given generators, with face adjacency computed.
    // Duplicate generators are rejected: harmless, but they flag malformed input.
    static simplicial_complex closure(const std::vector<simplex>& generators);

    // Builds from an explicit simplex list which must already be closed under
    // faces; duplicates are rejected.
    static simplicial_complex from_simplices(const std::vector<simplex>& simplices);

    int size() const { return static_cast<int>(simplices_.size()); }
    int dim() const { return dim_; }
    const simplex& at(int id) const { return simplices_[id]; }
    const std::vector<simplex>& simplices() const { return simplices_; }

    std::optional<int> find(const simplex& s) const;
    int require(const simplex& s) const; // throws SimplexNotInComplex

    // Codimension-1 adjacency.
    const std::vector<int>& facets_of(int id) const { return facets_[id]; }
    const std::vector<int>& cofacets_of(int id) const { return cofacets_[id]; }

    // {τ ∈ K : σ ⊆ τ}, including σ; ids in canonical order.
    std::vector<int> upper_set(int id) const;
    // {τ ∈ K : τ ⊆ σ}, including σ; ids in canonical order.
    std::vector<int> lower_set(int id) const;

    bool operator==(const simplicial_complex& other) const {
        return simplices_ == other.simplices_;
    }

private:
    explicit simplicial_complex(std::vector<simplex> sorted);

    std::vector<simplex> simplices_;
    std::vector<std::vector<int>> facets_;
    std::vector<std::vector<int>> cofacets_;
    int dim_ = -1;
};

// Convenience wrappers working on simplices rather than ids.
std::vector<simplex> upper_set(const simplicial_complex& K, const simplex& s);
std::vector<simplex> lower_set(const simplicial_complex& K, const simplex& s);

} // namespace tsr
