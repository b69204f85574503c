#pragma once

#include "tsr/filtration.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tsr {

// A permutation of all simplex ids of a complex, kept as a linear extension
// of the face poset wherever the API hands one out.
struct simplex_order {
    std::vector<int> seq;
    bool operator==(const simplex_order&) const = default;
};

// The order induced by f itself (ids sorted by value).
simplex_order order_of(const filtration& f);

// Throws NotAPermutation; returns false on a permutation that is not a
// linear extension of the face poset.
bool is_linear_extension(const simplicial_complex& K, const simplex_order& w);

// Closed-form realizability predicate: w is ε-realizable iff it is a linear
// extension and every inverted pair has value gap strictly below 2ε. True
// exactly when some injective filtration g with sup distance ≤ ε induces w.
bool is_order_realizable(const filtration& f, const simplex_order& w, const rat& eps);

// Greedy interval placement producing an injective filtration g with
// ‖f−g‖∞ ≤ ε that induces w; throws if w is not ε-realizable.
filtration realization_witness(const filtration& f, const simplex_order& w, const rat& eps);

// Enumerates all ε-realizable orders by backtracking over linear extensions,
// pruning prefixes that already violate the inversion-gap bound. Deterministic
// emission order (lexicographic in canonical simplex ids). Throws cap_error
// once more than `cap` orders exist.
std::uint64_t for_each_realizable_order(const filtration& f, const rat& eps, std::uint64_t cap,
                                        const std::function<void(const std::vector<int>&)>& visit);

// Materialized variant; threads > 1 enumerates disjoint prefix subtrees in
// parallel and merges them in canonical order, byte-identical to serial.
std::vector<simplex_order> realizable_orders(const filtration& f, const rat& eps,
                                             std::uint64_t cap, int threads = 1);

// Partitioned enumeration support: disjoint prefixes covering the whole
// search space, in canonical order. Entries of full length are complete
// orders. Grows the partition until at least min_chunks entries (or the tree
// is exhausted).
std::vector<std::vector<int>> enumeration_prefixes(const filtration& f, const rat& eps,
                                                   int min_chunks);

// Continues enumeration below one prefix; the visitor returns false to
// abandon the rest of the subtree. Returns the number of orders visited.
std::uint64_t enumerate_below_prefix(const filtration& f, const rat& eps,
                                     const std::vector<int>& prefix,
                                     const std::function<bool(const std::vector<int>&)>& visit);

std::string format_order(const simplicial_complex& K, const simplex_order& w);

} // namespace tsr
