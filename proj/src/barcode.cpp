#include "tsr/barcode.hpp"

#include "tsr/errors.hpp"

#include <algorithm>

namespace tsr {

barcode_t barcode(const reduced_filtration& R, const filtration& f, int n) {
    if (n < 0 || n > R.complex().dim())
        throw domain_error("DimensionOutOfRange: no simplices of dimension " + std::to_string(n));
    if (!(order_of(f) == R.order()))
        throw validation_error("barcode requires the reduction of f's own order");

    barcode_t bars;
    for (const auto& [birth_pos, death_pos] : R.pairs()) {
        const int birth_id = R.id_at(birth_pos);
        if (R.complex().at(birth_id).dim() != n) continue;
        bar b;
        b.dim = n;
        b.birth_id = birth_id;
        b.death_id = R.id_at(death_pos);
        b.a = f.value(birth_id);
        b.b = f.value(*b.death_id);
        bars.push_back(std::move(b));
    }
    for (int pos : R.essential()) {
        const int id = R.id_at(pos);
        if (R.complex().at(id).dim() != n) continue;
        bar b;
        b.dim = n;
        b.birth_id = id;
        b.a = f.value(id);
        bars.push_back(std::move(b));
    }
    std::sort(bars.begin(), bars.end(), [](const bar& x, const bar& y) {
        if (x.a != y.a) return x.a < y.a;
        return level_less(x.b, y.b);
    });
    return bars;
}

std::string format_bar(const simplicial_complex& K, const bar& b) {
    std::string out = "[" + format_rational(b.a) + ", " + format_level(b.b) + ")";
    out += "  birth " + format_simplex(K.at(b.birth_id));
    if (b.death_id) out += "  death " + format_simplex(K.at(*b.death_id));
    return out;
}

namespace {

// Perfect-matching feasibility at threshold eps, with one diagonal ghost per
// real bar on the opposite side (the classic reduction for bottleneck
// matchings). Sizes here are tiny; augmenting paths are plenty.
class matcher {
public:
    matcher(int n_left, int n_right) : nl_(n_left), nr_(n_right), adj_(n_left) {}

    void add_edge(int l, int r) { adj_[l].push_back(r); }

    bool perfect() {
        match_l_.assign(nl_, -1);
        match_r_.assign(nr_, -1);
        int matched = 0;
        for (int l = 0; l < nl_; ++l) {
            visited_.assign(nr_, false);
            if (augment(l)) ++matched;
        }
        return matched == nl_;
    }

private:
    bool augment(int l) {
        for (int r : adj_[l]) {
            if (visited_[r]) continue;
            visited_[r] = true;
            if (match_r_[r] < 0 || augment(match_r_[r])) {
                match_l_[l] = r;
                match_r_[r] = l;
                return true;
            }
        }
        return false;
    }

    int nl_, nr_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_l_, match_r_;
    std::vector<char> visited_;
};

bool feasible(const std::vector<bar>& f1, const std::vector<bar>& f2, const rat& eps) {
    const int n1 = static_cast<int>(f1.size()), n2 = static_cast<int>(f2.size());
    // left = f1 bars + n2 ghosts, right = f2 bars + n1 ghosts
    matcher m(n1 + n2, n2 + n1);
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j)
            if (abs(rat(f1[i].a - f2[j].a)) <= eps && abs(rat(*f1[i].b - *f2[j].b)) <= eps)
                m.add_edge(i, j);
        if (f1[i].length() <= 2 * eps)
            for (int j = 0; j < n1; ++j) m.add_edge(i, n2 + j);
    }
    for (int i = 0; i < n2; ++i) {
        if (f2[i].length() <= 2 * eps)
            for (int j = 0; j < n2; ++j) m.add_edge(n1 + j, i);
        for (int j = 0; j < n1; ++j) m.add_edge(n1 + i, n2 + j); // ghost-ghost
    }
    return m.perfect();
}

} // namespace

rat bottleneck_distance(const barcode_t& b1, const barcode_t& b2) {
    std::vector<bar> f1, f2;
    std::vector<rat> inf1, inf2;
    for (const auto& b : b1) {
        if (b.finite())
            f1.push_back(b);
        else
            inf1.push_back(b.a);
    }
    for (const auto& b : b2) {
        if (b.finite())
            f2.push_back(b);
        else
            inf2.push_back(b.a);
    }

    if (inf1.size() != inf2.size())
        throw domain_error("InfiniteBarMismatch: " + std::to_string(inf1.size()) + " vs " +
                           std::to_string(inf2.size()) + " infinite bars");
    // For infinite bars, matching sorted left endpoints minimizes the max gap.
    std::sort(inf1.begin(), inf1.end());
    std::sort(inf2.begin(), inf2.end());
    rat floor = 0;
    for (std::size_t i = 0; i < inf1.size(); ++i)
        floor = std::max(floor, abs(rat(inf1[i] - inf2[i])));

    std::vector<rat> candidates{floor};
    for (const auto& x : f1) {
        for (const auto& y : f2) {
            candidates.push_back(abs(rat(x.a - y.a)));
            candidates.push_back(abs(rat(*x.b - *y.b)));
        }
        candidates.push_back(x.length() / 2);
    }
    for (const auto& y : f2) candidates.push_back(y.length() / 2);

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Smallest candidate >= floor that admits a matching.
    std::size_t lo = std::lower_bound(candidates.begin(), candidates.end(), floor) -
                     candidates.begin();
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible(f1, f2, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

} // namespace tsr
