#include "tsr/orders.hpp"

#include "tsr/errors.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tsr {

namespace {

void check_permutation(int n, const simplex_order& w) {
    std::vector<char> seen(n, 0);
    if (static_cast<int>(w.seq.size()) != n)
        throw validation_error("NotAPermutation: order has " + std::to_string(w.seq.size()) +
                               " entries, complex has " + std::to_string(n));
    for (int id : w.seq) {
        if (id < 0 || id >= n || seen[id])
            throw validation_error("NotAPermutation: bad or repeated id " + std::to_string(id));
        seen[id] = 1;
    }
}

// Precomputed tables shared by every node of the backtracking search. The
// inner loop is pure integer work; all rational comparisons happen here.
struct enum_tables {
    int n;
    std::vector<int> by_value;            // ids ascending by f-value
    std::vector<std::vector<char>> blocked; // blocked[i][j]: i may not precede j
    std::vector<int> facet_count;

    enum_tables(const filtration& f, const rat& eps) : n(f.size()), by_value(f.order()) {
        if (eps < 0) throw domain_error("epsilon must be non-negative");
        const rat two_eps = 2 * eps;
        blocked.assign(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (f.value(i) > f.value(j))
                    blocked[i][j] = (f.value(i) - f.value(j) >= two_eps);
        facet_count.resize(n);
        for (int id = 0; id < n; ++id)
            facet_count[id] = static_cast<int>(f.complex().facets_of(id).size());
    }
};

struct enum_state {
    std::vector<char> placed;
    std::vector<int> pending; // unplaced facets per simplex
    std::vector<int> seq;

    enum_state(const enum_tables& t) : placed(t.n, 0), pending(t.facet_count) {
        seq.reserve(t.n);
    }
};

// Placing c is allowed when its facets are in and the worst remaining
// inversion partner (the min-value unplaced simplex) is within the gap bound.
bool can_place(const enum_tables& t, const enum_state& st, int c) {
    if (st.placed[c] || st.pending[c] != 0) return false;
    for (int id : t.by_value) {
        if (st.placed[id] || id == c) continue;
        return !t.blocked[c][id];
    }
    return true;
}

void place(const simplicial_complex& K, enum_state& st, int c) {
    st.placed[c] = 1;
    st.seq.push_back(c);
    for (int cof : K.cofacets_of(c)) --st.pending[cof];
}

void unplace(const simplicial_complex& K, enum_state& st, int c) {
    st.placed[c] = 0;
    st.seq.pop_back();
    for (int cof : K.cofacets_of(c)) ++st.pending[cof];
}

// Depth-first search in canonical candidate order. Returns false once the
// visitor asks to stop; count accumulates visited complete orders.
bool dfs(const simplicial_complex& K, const enum_tables& t, enum_state& st, std::uint64_t& count,
         const std::function<bool(const std::vector<int>&)>& visit) {
    if (static_cast<int>(st.seq.size()) == t.n) {
        ++count;
        return visit(st.seq);
    }
    for (int c = 0; c < t.n; ++c) {
        if (!can_place(t, st, c)) continue;
        place(K, st, c);
        bool keep_going = dfs(K, t, st, count, visit);
        unplace(K, st, c);
        if (!keep_going) return false;
    }
    return true;
}

enum_state replay_prefix(const simplicial_complex& K, const enum_tables& t,
                         const std::vector<int>& prefix) {
    enum_state st(t);
    for (int id : prefix) place(K, st, id);
    return st;
}

} // namespace

simplex_order order_of(const filtration& f) { return simplex_order{f.order()}; }

bool is_linear_extension(const simplicial_complex& K, const simplex_order& w) {
    check_permutation(K.size(), w);
    std::vector<char> placed(K.size(), 0);
    for (int id : w.seq) {
        for (int face : K.facets_of(id))
            if (!placed[face]) return false;
        placed[id] = 1;
    }
    return true;
}

bool is_order_realizable(const filtration& f, const simplex_order& w, const rat& eps) {
    if (eps < 0) throw domain_error("epsilon must be non-negative");
    if (!is_linear_extension(f.complex(), w)) return false;
    const rat two_eps = 2 * eps;
    bool have_max = false;
    rat running_max;
    for (int id : w.seq) {
        if (have_max && running_max > f.value(id) && running_max - f.value(id) >= two_eps)
            return false;
        if (!have_max || f.value(id) > running_max) {
            running_max = f.value(id);
            have_max = true;
        }
    }
    return true;
}

filtration realization_witness(const filtration& f, const simplex_order& w, const rat& eps) {
    if (!is_order_realizable(f, w, eps))
        throw domain_error("order is not realizable at epsilon " + format_rational(eps));
    const int n = f.size();
    if (n == 1) return f;

    // Step size: small enough that chained bumps never leave [f−ε, f+ε].
    // Inverted pairs leave strict slack 2ε − gap; plain pairs leave ρ.
    rat slack = injectivity_radius(f);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (f.value(w.seq[i]) > f.value(w.seq[j]))
                slack = std::min(slack, rat(2 * eps - (f.value(w.seq[i]) - f.value(w.seq[j]))));
    const rat eta = slack / (n + 1);

    std::vector<rat> g(n);
    rat prev;
    for (int k = 0; k < n; ++k) {
        int id = w.seq[k];
        rat lo = f.value(id) - eps;
        g[id] = (k == 0) ? lo : std::max(rat(prev + eta), lo);
        prev = g[id];
    }
    return validate_filtration(f.complex_ptr(), std::move(g));
}

std::uint64_t for_each_realizable_order(const filtration& f, const rat& eps, std::uint64_t cap,
                                        const std::function<void(const std::vector<int>&)>& visit) {
    enum_tables t(f, eps);
    enum_state st(t);
    std::uint64_t count = 0;
    bool overflow = false;
    dfs(f.complex(), t, st, count, [&](const std::vector<int>& seq) {
        if (count > cap) {
            overflow = true;
            return false;
        }
        if (visit) visit(seq);
        return true;
    });
    if (overflow) throw cap_error(cap);
    return count;
}

std::vector<std::vector<int>> enumeration_prefixes(const filtration& f, const rat& eps,
                                                   int min_chunks) {
    enum_tables t(f, eps);
    std::vector<std::vector<int>> frontier{{}};
    while (static_cast<int>(frontier.size()) < min_chunks) {
        std::vector<std::vector<int>> next;
        bool expanded = false;
        for (const auto& prefix : frontier) {
            if (static_cast<int>(prefix.size()) == t.n) {
                next.push_back(prefix);
                continue;
            }
            enum_state st = replay_prefix(f.complex(), t, prefix);
            for (int c = 0; c < t.n; ++c) {
                if (!can_place(t, st, c)) continue;
                auto ext = prefix;
                ext.push_back(c);
                next.push_back(std::move(ext));
                expanded = true;
            }
        }
        frontier = std::move(next);
        if (!expanded) break;
    }
    return frontier;
}

std::uint64_t enumerate_below_prefix(const filtration& f, const rat& eps,
                                     const std::vector<int>& prefix,
                                     const std::function<bool(const std::vector<int>&)>& visit) {
    enum_tables t(f, eps);
    enum_state st = replay_prefix(f.complex(), t, prefix);
    std::uint64_t count = 0;
    dfs(f.complex(), t, st, count, visit);
    return count;
}

std::vector<simplex_order> realizable_orders(const filtration& f, const rat& eps,
                                             std::uint64_t cap, int threads) {
    if (threads <= 1) {
        std::vector<simplex_order> out;
        for_each_realizable_order(f, eps, cap,
                                  [&](const std::vector<int>& seq) { out.push_back({seq}); });
        return out;
    }

    auto prefixes = enumeration_prefixes(f, eps, threads * 8);
    std::vector<std::vector<simplex_order>> buckets(prefixes.size());
    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> over{false};

    // The shared counter is only touched in batches; per-order atomics would
    // dominate the cheap search loop.
    constexpr std::uint64_t batch = 1024;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(prefixes.size()); ++i) {
        if (over.load(std::memory_order_relaxed)) continue;
        std::uint64_t local = 0;
        enumerate_below_prefix(f, eps, prefixes[i], [&](const std::vector<int>& seq) {
            buckets[i].push_back({seq});
            if (++local % batch == 0) {
                if (total.fetch_add(batch) + batch > cap) {
                    over.store(true);
                    return false;
                }
                local = 0;
            }
            return true;
        });
        if (local != 0 && total.fetch_add(local) + local > cap) over.store(true);
    }
    if (over.load() || total.load() > cap) throw cap_error(cap);

    std::vector<simplex_order> out;
    out.reserve(total.load());
    for (auto& b : buckets)
        for (auto& w : b) out.push_back(std::move(w));
    return out;
}

std::string format_order(const simplicial_complex& K, const simplex_order& w) {
    std::string out;
    for (std::size_t i = 0; i < w.seq.size(); ++i) {
        if (i) out += ", ";
        out += format_simplex(K.at(w.seq[i]));
    }
    return out;
}

} // namespace tsr
