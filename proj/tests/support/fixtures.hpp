#pragma once

// Canonical fixtures, random instance generation and the independent
// homology-rank oracle shared by the unit and acceptance suites.

#include "tsr/barcode.hpp"
#include "tsr/chain.hpp"
#include "tsr/filtration.hpp"
#include "tsr/orders.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

using namespace tsr;

inline filtration make(const std::vector<std::pair<simplex, std::string>>& items) {
    std::vector<simplex> simplices;
    std::map<simplex, rat> values;
    for (const auto& [s, v] : items) {
        simplices.push_back(s);
        values[s] = parse_rational(v);
    }
    auto K = std::make_shared<simplicial_complex>(simplicial_complex::from_simplices(simplices));
    return validate_filtration(std::move(K), values);
}

// A=0, B=1, AB=2
inline filtration edge() { return make({{{0}, "0"}, {{1}, "1"}, {{0, 1}, "2"}}); }

// A=0, B=1, C=2, AB=3, BC=4
inline filtration path3() {
    return make({{{0}, "0"}, {{1}, "1"}, {{2}, "2"}, {{0, 1}, "3"}, {{1, 2}, "4"}});
}

// generic variant: all pairwise differences distinct
inline filtration path3g() {
    return make(
        {{{0}, "0"}, {{1}, "1"}, {{2}, "22/10"}, {{0, 1}, "35/10"}, {{1, 2}, "49/10"}});
}

// A=0, B=1, C=2, AB=3, BC=4, AC=5
inline filtration tri() {
    return make({{{0}, "0"},
                 {{1}, "1"},
                 {{2}, "2"},
                 {{0, 1}, "3"},
                 {{1, 2}, "4"},
                 {{0, 2}, "5"}});
}

// tri plus the face ABC=6
inline filtration trif() {
    return make({{{0}, "0"},
                 {{1}, "1"},
                 {{2}, "2"},
                 {{0, 1}, "3"},
                 {{1, 2}, "4"},
                 {{0, 2}, "5"},
                 {{0, 1, 2}, "6"}});
}

// Cycle graph on m vertices, consecutive integer values: vertices first,
// then the ring edges [0,1], [1,2], ..., [m-2,m-1] and the closing edge
// [0,m-1] last.
inline filtration cycle_graph(int m) {
    std::vector<std::pair<simplex, std::string>> items;
    for (int v = 0; v < m; ++v) items.push_back({simplex{v}, std::to_string(v)});
    for (int v = 0; v + 1 < m; ++v)
        items.push_back({simplex{v, v + 1}, std::to_string(m + v)});
    items.push_back({simplex{0, m - 1}, std::to_string(2 * m - 1)});
    return make(items);
}

// --- random instances -------------------------------------------------

// Random closed complex with at most max_simplices simplices: a handful of
// vertices, a random edge subset, sometimes a filled triangle.
inline std::shared_ptr<const simplicial_complex> random_complex(std::mt19937_64& rng,
                                                                int max_simplices = 9) {
    for (;;) {
        const int nv = 3 + static_cast<int>(rng() % 3);
        std::vector<simplex> gens;
        for (int v = 0; v < nv; ++v) gens.push_back(simplex{v});
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < nv; ++a)
            for (int b = a + 1; b < nv; ++b) pairs.emplace_back(a, b);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        const int ne = static_cast<int>(rng() % (pairs.size() + 1));
        for (int e = 0; e < ne; ++e) gens.push_back(simplex{pairs[e].first, pairs[e].second});
        if (rng() % 5 == 0 && nv >= 3) {
            // fill one triangle; closure adds the missing edges
            std::vector<int> vs{0, 1, 2};
            std::shuffle(vs.begin(), vs.end(), rng);
            std::sort(vs.begin(), vs.end());
            gens.push_back(simplex{vs[0], vs[1], vs[2]});
        }
        auto K = std::make_shared<simplicial_complex>(simplicial_complex::closure(gens));
        if (K->size() <= max_simplices) return K;
    }
}

// Random injective face-monotone rational values: a random linear extension
// of the face poset with strictly increasing values of mixed denominators.
inline filtration random_filtration(std::mt19937_64& rng,
                                    std::shared_ptr<const simplicial_complex> K) {
    const int n = K->size();
    std::vector<int> pending(n), ext;
    for (int id = 0; id < n; ++id) pending[id] = static_cast<int>(K->facets_of(id).size());
    std::vector<char> placed(n, 0);
    while (static_cast<int>(ext.size()) < n) {
        std::vector<int> avail;
        for (int id = 0; id < n; ++id)
            if (!placed[id] && pending[id] == 0) avail.push_back(id);
        const int pick = avail[rng() % avail.size()];
        placed[pick] = 1;
        ext.push_back(pick);
        for (int cof : K->cofacets_of(pick)) --pending[cof];
    }
    static const int dens[] = {1, 2, 3, 4, 5, 7};
    std::vector<rat> values(n);
    rat v = rat(static_cast<int>(rng() % 5));
    for (int id : ext) {
        v += rat(1 + static_cast<int>(rng() % 8), dens[rng() % 6]);
        values[id] = v;
    }
    return validate_filtration(std::move(K), std::move(values));
}

inline filtration random_filtration(std::mt19937_64& rng, int max_simplices = 9) {
    return random_filtration(rng, random_complex(rng, max_simplices));
}

// Random injective perturbation g with ‖f−g‖∞ ≤ eps; falls back to f itself
// if rejection sampling keeps violating monotonicity or injectivity.
inline filtration random_perturbation(std::mt19937_64& rng, const filtration& f,
                                      const rat& eps) {
    static const int dens[] = {13, 16, 19, 23};
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<rat> g(f.values());
        for (auto& v : g) {
            const int m = dens[rng() % 4];
            const int k = static_cast<int>(rng() % (2 * m + 1)) - m;
            v += eps * rat(k, m);
        }
        try {
            return validate_filtration(f.complex_ptr(), std::move(g));
        } catch (const validation_error&) {
            continue;
        }
    }
    return f;
}

// --- independent homology-rank oracle ---------------------------------

// Dense Gaussian-elimination rank over F_p; shares nothing with the
// column-reduction implementation.
inline int dense_rank(const field_spec& F, std::vector<std::vector<std::uint32_t>> m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const std::uint32_t inv = F.inv(m[rank][c]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const std::uint32_t lambda = F.mul(m[r][c], inv);
            for (int cc = c; cc < cols; ++cc)
                m[r][cc] = F.sub(m[r][cc], F.mul(lambda, m[rank][cc]));
        }
        ++rank;
    }
    return rank;
}

// Boundary operator from dimension d to d-1, restricted to the complex's
// simplices with f-value <= r.
inline std::vector<std::vector<std::uint32_t>> boundary_matrix(const filtration& f,
                                                               const field_spec& F, const rat& r,
                                                               int d) {
    const auto& K = f.complex();
    std::vector<int> rows_ids, col_ids;
    for (int id = 0; id < K.size(); ++id) {
        if (f.value(id) > r) continue;
        if (K.at(id).dim() == d - 1) rows_ids.push_back(id);
        if (K.at(id).dim() == d) col_ids.push_back(id);
    }
    std::map<int, int> row_of;
    for (std::size_t i = 0; i < rows_ids.size(); ++i) row_of[rows_ids[i]] = static_cast<int>(i);
    std::vector<std::vector<std::uint32_t>> m(rows_ids.size(),
                                              std::vector<std::uint32_t>(col_ids.size(), 0));
    for (std::size_t c = 0; c < col_ids.size(); ++c)
        for (const auto& [face, coeff] : boundary_chain(K, col_ids[c], F).terms)
            m[row_of[face]][c] = coeff;
    return m;
}

// dim H_n(K_r) = (#n-simplices - rank ∂_n) - rank ∂_{n+1} over the sublevel.
inline int homology_rank(const filtration& f, const field_spec& F, const rat& r, int n) {
    const auto& K = f.complex();
    int n_simplices = 0;
    for (int id = 0; id < K.size(); ++id)
        if (K.at(id).dim() == n && f.value(id) <= r) ++n_simplices;
    const int rank_dn = dense_rank(F, boundary_matrix(f, F, r, n));
    const int rank_dn1 = dense_rank(F, boundary_matrix(f, F, r, n + 1));
    return n_simplices - rank_dn - rank_dn1;
}

// Bars of barcode(f, n) alive at level r.
inline int bars_alive(const barcode_t& bars, const rat& r) {
    int alive = 0;
    for (const auto& b : bars)
        if (b.a <= r && (!b.b || r < *b.b)) ++alive;
    return alive;
}

} // namespace fixtures
