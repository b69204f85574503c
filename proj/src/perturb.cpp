#include "tsr/perturb.hpp"

#include "tsr/errors.hpp"

#include <algorithm>
#include <functional>

namespace tsr {

namespace {

bool values_injective(const std::vector<rat>& values) {
    std::vector<rat> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

rat min_positive_gap(const std::vector<rat>& values, const rat& fallback) {
    std::vector<rat> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    rat best = fallback;
    bool found = false;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        rat gap = sorted[i] - sorted[i - 1];
        if (gap > 0 && (!found || gap < best)) {
            best = gap;
            found = true;
        }
    }
    return best;
}

// Shared repair: try the construction at full ε; if the result collides,
// shrink the shift (δ = ρ/8, capped so the construction's precondition
// survives) and separate any remaining collisions with id-indexed offsets.
// Offsets grow with the canonical id, and faces have smaller ids than their
// cofaces, so strict face-monotonicity survives.
filtration build_with_repair(const filtration& f, const rat& eps, const rat& headroom,
                             const std::function<std::vector<rat>(const rat&)>& build) {
    std::vector<rat> values = build(eps);
    if (values_injective(values)) return validate_filtration(f.complex_ptr(), std::move(values));

    const rat shrink = std::min(rat(injectivity_radius(f) / 8), rat(headroom / 2));
    const rat eps2 = eps - shrink;
    values = build(eps2);
    if (!values_injective(values)) {
        const int n = f.size();
        const rat ming = min_positive_gap(values, shrink);
        const rat theta = std::min(ming, shrink) / (2 * n);
        for (int id = 0; id < n; ++id) values[id] += theta * id;
    }
    return validate_filtration(f.complex_ptr(), std::move(values));
}

} // namespace

filtration switch_pair(const filtration& f, const simplex& s1, const simplex& s2,
                       const rat& eps) {
    const auto& K = f.complex();
    const int id1 = K.require(s1), id2 = K.require(s2);
    if (s1.dim() != s2.dim())
        throw domain_error("DimensionMismatch: " + format_simplex(s1) + " and " +
                           format_simplex(s2) + " have different dimensions");
    if (id1 == id2) throw domain_error("switch_pair needs two distinct simplices");
    if (eps <= 0) throw domain_error("epsilon must be positive");
    if (f.value(id1) >= f.value(id2))
        throw domain_error("switch_pair requires f(" + format_simplex(s1) + ") < f(" +
                           format_simplex(s2) + ")");
    const rat gap = f.value(id2) - f.value(id1);
    if (gap >= 2 * eps)
        throw domain_error("PreconditionGapTooLarge: value gap " + format_rational(gap) +
                           " is not below 2*epsilon = " + format_rational(rat(2 * eps)));

    const auto upper = K.upper_set(id1);
    const auto lower = K.lower_set(id2);

    auto build = [&](const rat& e) {
        std::vector<rat> g(f.values());
        for (int id : upper) g[id] += e;
        for (int id : lower) g[id] -= e;
        return g;
    };
    return build_with_repair(f, eps, rat(eps - gap / 2), build);
}

filtration permute_block(const filtration& f, const std::vector<simplex>& block,
                         const std::vector<int>& pi, const rat& eps) {
    const auto& K = f.complex();
    const int k = static_cast<int>(block.size());
    if (k == 0) throw domain_error("empty block");
    if (eps <= 0) throw domain_error("epsilon must be positive");

    std::vector<int> ids(k);
    for (int i = 0; i < k; ++i) {
        ids[i] = K.require(block[i]);
        if (block[i].dim() != block[0].dim())
            throw domain_error("DimensionMismatch: block simplices must share a dimension");
        if (i > 0 && !(f.value(ids[i - 1]) < f.value(ids[i])))
            throw domain_error("BlockNotSorted: block must be strictly f-increasing");
    }

    std::vector<char> seen(k, 0);
    if (static_cast<int>(pi.size()) != k)
        throw validation_error("NotAPermutation: permutation size mismatch");
    for (int p : pi) {
        if (p < 0 || p >= k || seen[p])
            throw validation_error("NotAPermutation: bad or repeated index " + std::to_string(p));
        seen[p] = 1;
    }

    const rat span = f.value(ids[k - 1]) - f.value(ids[0]);
    if (span >= 2 * eps)
        throw domain_error("BlockSpanTooLarge: block span " + format_rational(span) +
                           " is not below 2*epsilon = " + format_rational(rat(2 * eps)));

    std::vector<char> in_block(f.size(), 0);
    for (int id : ids) in_block[id] = 1;

    auto build = [&](const rat& e) {
        std::vector<rat> g(f.values());
        // equal subdivision of (a, b] into k+1 parts, in permuted order
        const rat a = f.value(ids[k - 1]) - e;
        const rat step = (f.value(ids[0]) + e - a) / (k + 1);
        for (int i = 0; i < k; ++i) g[ids[pi[i]]] = a + step * (i + 1);

        rat eps_up = 0, eps_down = 0;
        std::vector<char> raise(f.size(), 0), lower(f.size(), 0);
        for (int i = 0; i < k; ++i) {
            const rat diff = g[ids[i]] - f.value(ids[i]);
            if (diff > 0) {
                eps_up = std::max(eps_up, diff);
                for (int id : K.upper_set(ids[i])) raise[id] = 1;
            } else if (diff < 0) {
                eps_down = std::max(eps_down, rat(-diff));
                for (int id : K.lower_set(ids[i])) lower[id] = 1;
            }
        }
        for (int id = 0; id < f.size(); ++id) {
            if (in_block[id]) continue;
            if (raise[id])
                g[id] += eps_up;
            else if (lower[id])
                g[id] -= eps_down;
        }
        return g;
    };
    return build_with_repair(f, eps, rat(eps - span / 2), build);
}

} // namespace tsr
