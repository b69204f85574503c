#include "tsr/rigidity.hpp"

#include "tsr/errors.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tsr {

namespace {

using row = std::vector<std::pair<int, std::uint32_t>>; // (simplex id, coeff), pivot = back

row row_axpy(const field_spec& F, const row& a, std::uint32_t lambda, const row& b) {
    row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, F.neg(F.mul(lambda, b[j].second)));
            ++j;
        } else {
            std::uint32_t c = F.sub(a[i].second, F.mul(lambda, b[j].second));
            if (c != 0) out.emplace_back(a[i].first, c);
            ++i, ++j;
        }
    }
    return out;
}

// Tracks the residual of a fixed cycle against the growing span of boundary
// vectors of coface simplices, fed in filtration order. The cycle terminates
// at the simplex whose boundary makes the residual vanish. This route is
// independent of the column-reduction pairing machinery.
class span_tracker {
public:
    span_tracker(const simplicial_complex& K, const field_spec& F, const chain& alpha)
        : K_(K), F_(F), residual_(alpha.terms) {}

    bool dead() const { return residual_.empty(); }

    // Adds ∂(id) to the span; true if the residual vanished right now.
    bool add_boundary(int id) {
        row r;
        for (const auto& [face, coeff] : boundary_chain(K_, id, F_).terms)
            r.emplace_back(face, coeff);
        insert(std::move(r));
        settle_residual();
        return dead();
    }

private:
    void insert(row r) {
        while (!r.empty()) {
            auto it = rows_.find(r.back().first);
            if (it == rows_.end()) {
                rows_.emplace(r.back().first, std::move(r));
                return;
            }
            r = row_axpy(F_, r, F_.mul(r.back().second, F_.inv(it->second.back().second)),
                         it->second);
        }
    }

    void settle_residual() {
        while (!residual_.empty()) {
            auto it = rows_.find(residual_.back().first);
            if (it == rows_.end()) return;
            residual_ = row_axpy(
                F_, residual_,
                F_.mul(residual_.back().second, F_.inv(it->second.back().second)), it->second);
        }
    }

    const simplicial_complex& K_;
    field_spec F_;
    std::map<int, row> rows_;
    row residual_;
};

struct sigma_partial {
    std::vector<std::pair<int, simplex_order>> found; // discovery order
    std::map<int, std::vector<simplex_order>> all;
    std::uint64_t examined = 0;
};

} // namespace

sigma_result sigma_epsilon(const filtration& f, const chain& alpha, const field_spec& F,
                           const rat& eps, std::uint64_t cap, int threads,
                           bool collect_all_witnesses) {
    if (eps <= 0)
        throw domain_error("EpsilonOutOfDomain: epsilon must be positive, got " +
                           format_rational(eps));
    const reduced_filtration R = reduce(f, F);
    const auto ls = class_lifespan(R, f, alpha); // validates cycle / zero chain
    if (!ls.b)
        throw domain_error("InfiniteTerminationScale: the class never terminates");

    const auto& K = f.complex();
    const int coface_dim = alpha.dim + 1;

    auto prefixes = enumeration_prefixes(f, eps, threads > 1 ? threads * 8 : 1);
    std::vector<sigma_partial> partials(prefixes.size());
    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> over{false};
    std::atomic<bool> missing_terminal{false};

    constexpr std::uint64_t batch = 1024;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(threads, 1))
#endif
    for (std::int64_t pi = 0; pi < static_cast<std::int64_t>(prefixes.size()); ++pi) {
        if (over.load(std::memory_order_relaxed)) continue;
        sigma_partial& part = partials[pi];
        // Terminal simplex depends only on the induced order of coface-dim
        // simplices, so memoize per subsequence.
        std::map<std::vector<int>, int> memo;
        std::vector<char> seen_member(K.size(), 0);
        std::vector<int> subseq;
        std::uint64_t local = 0;
        enumerate_below_prefix(f, eps, prefixes[pi], [&](const std::vector<int>& seq) {
            if (++local % batch == 0) {
                if (total.fetch_add(batch) + batch > cap) {
                    over.store(true);
                    return false;
                }
                local = 0;
            }
            ++part.examined;
            subseq.clear();
            for (int id : seq)
                if (K.at(id).dim() == coface_dim) subseq.push_back(id);
            int terminal = -1;
            if (auto it = memo.find(subseq); it != memo.end()) {
                terminal = it->second;
            } else {
                span_tracker tracker(K, F, alpha);
                for (int id : subseq)
                    if (tracker.add_boundary(id)) {
                        terminal = id;
                        break;
                    }
                memo.emplace(subseq, terminal);
            }
            if (terminal < 0) {
                missing_terminal.store(true);
                return false;
            }
            if (!seen_member[terminal]) {
                seen_member[terminal] = 1;
                part.found.emplace_back(terminal, simplex_order{seq});
            }
            if (collect_all_witnesses) part.all[terminal].push_back(simplex_order{seq});
            return true;
        });
        if (local != 0 && total.fetch_add(local) + local > cap) over.store(true);
    }
    if (over.load() || total.load() > cap) throw cap_error(cap);
    if (missing_terminal.load())
        throw domain_error("internal: class with finite termination scale survived a "
                           "realizable order");

    sigma_result out;
    out.eps = eps;
    for (std::size_t pi = 0; pi < prefixes.size(); ++pi) {
        out.orders_examined += partials[pi].examined;
        for (auto& [member, w] : partials[pi].found)
            out.witness.try_emplace(member, std::move(w)); // first prefix wins
        for (auto& [member, ws] : partials[pi].all) {
            auto& dst = out.all_witnesses[member];
            dst.insert(dst.end(), std::make_move_iterator(ws.begin()),
                       std::make_move_iterator(ws.end()));
        }
    }
    for (const auto& [member, w] : out.witness) out.members.push_back(member);
    return out;
}

std::vector<rat> rigidity_thresholds(const filtration& f) {
    std::vector<rat> out;
    const int n = f.size();
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.push_back(abs(rat(f.value(i) - f.value(j))) / 2);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

r_bounds_result r_bounds(const filtration& f, const reduced_filtration& R, const rat& b, int n) {
    r_bounds_result out;
    const auto& K = f.complex();
    for (int id = 0; id < K.size(); ++id) {
        if (K.at(id).dim() != n + 1) continue;
        const rat v = f.value(id);
        const auto cls = R.classify(R.position_of(id));
        if (cls == simplex_class::birth && v > b) {
            rat gap = v - b;
            if (!out.upper || gap < *out.upper) out.upper = gap;
        } else if (cls == simplex_class::terminal && v < b) {
            rat gap = b - v;
            if (!out.lower || gap < *out.lower) out.lower = gap;
        }
    }
    return out;
}

rigidity_certificate rigidity_radius(const filtration& f, const chain& alpha,
                                     const field_spec& F) {
    const reduced_filtration R = reduce(f, F);
    const auto ls = class_lifespan(R, f, alpha);
    if (!ls.b)
        throw domain_error("InfiniteTerminationScale: rigidity radius needs a finite "
                           "termination scale");

    rigidity_certificate cert;
    cert.a = ls.a;
    cert.b = *ls.b;
    cert.terminal_id = ls.terminal_id;
    const auto bounds = r_bounds(f, R, cert.b, alpha.dim);
    cert.r_upper = bounds.upper;
    cert.r_lower = bounds.lower;

    const rat lifespan = cert.b - cert.a;
    rat best = lifespan;
    if (cert.r_upper && *cert.r_upper < best) best = *cert.r_upper;
    if (cert.r_lower && *cert.r_lower < best) best = *cert.r_lower;
    cert.epsilon_star = best / 2;
    if (lifespan == best) cert.limiting.push_back(limit_kind::lifespan);
    if (cert.r_upper && *cert.r_upper == best) cert.limiting.push_back(limit_kind::upper_gap);
    if (cert.r_lower && *cert.r_lower == best) cert.limiting.push_back(limit_kind::lower_gap);
    return cert;
}

breaking_report breaking_analysis(const filtration& f, const chain& alpha, const field_spec& F,
                                  std::uint64_t cap, int threads) {
    const reduced_filtration R = reduce(f, F);
    const auto ls = class_lifespan(R, f, alpha);
    if (!ls.b)
        throw domain_error("InfiniteTerminationScale: breaking analysis needs a finite "
                           "termination scale");

    breaking_report report;
    report.delta1_id = *ls.terminal_id;

    const rat d_top = (*ls.b - ls.a) / 2;
    const auto thresholds = rigidity_thresholds(f);

    for (std::size_t i = 0; i < thresholds.size() && thresholds[i] <= d_top; ++i) {
        // Σ is constant on the right-closed interval between consecutive
        // thresholds; probe its value just above thresholds[i].
        rat probe = (i + 1 < thresholds.size()) ? rat((thresholds[i] + thresholds[i + 1]) / 2)
                                                : rat(thresholds[i] + 1);
        const auto sigma = sigma_epsilon(f, alpha, F, probe, cap, threads);
        if (sigma.members.size() > 1) {
            report.t0 = thresholds[i];
            report.probe_eps = probe;
            for (int id : sigma.members)
                if (id != report.delta1_id) report.new_terminal_ids.push_back(id);
            break;
        }
    }
    if (!report.t0) return report; // rigid on all of D

    // Predicted partner: a coface-dimension simplex at value distance
    // exactly 2·t0 from Δ1.
    const auto& K = f.complex();
    const rat two_t0 = 2 * *report.t0;
    const rat v1 = f.value(report.delta1_id);
    std::vector<int> above, below;
    for (int id = 0; id < K.size(); ++id) {
        if (id == report.delta1_id || K.at(id).dim() != alpha.dim + 1) continue;
        if (f.value(id) - v1 == two_t0) above.push_back(id);
        if (v1 - f.value(id) == two_t0) below.push_back(id);
    }
    report.partner_candidate_ids = below;
    report.partner_candidate_ids.insert(report.partner_candidate_ids.end(), above.begin(),
                                        above.end());
    if (report.partner_candidate_ids.size() == 1) {
        const int partner = report.partner_candidate_ids.front();
        report.partner_id = partner;
        const auto cls = R.classify(R.position_of(partner));
        if (!above.empty())
            // Δ1 is the lower endpoint; an independently critical pair needs
            // the partner to create a class.
            report.classification = (cls == simplex_class::birth) ? criticality::independent
                                                                  : criticality::inconclusive;
        else
            // Δ1 is the upper endpoint; a sequentially critical pair needs
            // the partner to terminate a class.
            report.classification = (cls == simplex_class::terminal) ? criticality::sequential
                                                                     : criticality::inconclusive;
    } else {
        report.classification = criticality::inconclusive;
    }
    return report;
}

bar_rigidity_verdict bar_rigidity_check(const filtration& f, const field_spec& F,
                                        const bar& designated, const rat& eps) {
    if (!designated.finite())
        throw domain_error("InfiniteBar: rigidity hypotheses need a finite bar");
    if (eps <= 0) throw domain_error("epsilon must be positive");

    const reduced_filtration R = reduce(f, F);
    const auto bars = barcode(R, f, designated.dim);
    bool found = false;
    bar_rigidity_verdict v;
    v.lifespan_ok = eps < designated.length() / 4;

    const rat a2 = designated.a + 2 * eps;
    const rat b2 = *designated.b - 2 * eps;
    for (const auto& other : bars) {
        if (!found && other.a == designated.a && other.b == designated.b) {
            found = true; // skip the designated bar itself, once
            continue;
        }
        const bool separated = other.a > a2 || (other.finite() && *other.b < b2);
        if (!separated) v.separation_violations.push_back(other);
    }
    if (!found) throw domain_error("no bar [" + format_rational(designated.a) + ", " +
                                   format_level(designated.b) + ") in dimension " +
                                   std::to_string(designated.dim));
    v.separation_ok = v.separation_violations.empty();

    const auto bounds = r_bounds(f, R, *designated.b, designated.dim);
    v.r_upper = bounds.upper;
    v.r_lower = bounds.lower;
    const level lim = level_min(bounds.upper, bounds.lower);
    v.bounds_ok = !lim || eps <= *lim / 2;
    v.rigid = v.lifespan_ok && v.separation_ok && v.bounds_ok;
    return v;
}

bar matched_bar(const filtration& f, const filtration& g, const field_spec& F,
                const bar& designated, const rat& eps) {
    if (!same_complex(f, g))
        throw validation_error("matched_bar requires filtrations on one complex");
    if (sup_distance(f, g) > eps)
        throw domain_error("PerturbationTooLarge: sup distance " +
                           format_rational(sup_distance(f, g)) + " exceeds epsilon " +
                           format_rational(eps));
    const auto verdict = bar_rigidity_check(f, F, designated, eps);
    if (!verdict.rigid)
        throw domain_error("HypothesesNotSatisfied: bar rigidity hypotheses fail for [" +
                           format_rational(designated.a) + ", " + format_level(designated.b) +
                           ")");

    const reduced_filtration Rf = reduce(f, F);
    const chain alpha = Rf.column_as_chain(Rf.position_of(*designated.death_id));

    const reduced_filtration Rg = reduce(g, F);
    const auto ls = class_lifespan(Rg, g, alpha);
    if (!ls.b) throw domain_error("NoMatchingBar: representative cycle survives in g");

    const auto bars_g = barcode(Rg, g, designated.dim);
    const bar* match = nullptr;
    for (const auto& b : bars_g)
        if (b.b == ls.b) {
            if (match) throw domain_error("NoMatchingBar: ambiguous termination level");
            match = &b;
        }
    if (!match) throw domain_error("NoMatchingBar: no bar of g ends at " + format_level(ls.b));
    if (abs(rat(*match->b - *designated.b)) > eps)
        throw domain_error("NoMatchingBar: matched endpoint drifted beyond epsilon");
    return *match;
}

std::string to_string(criticality c) {
    switch (c) {
    case criticality::sequential: return "sequential";
    case criticality::independent: return "independent";
    default: return "inconclusive";
    }
}

std::string to_string(limit_kind k) {
    switch (k) {
    case limit_kind::lifespan: return "lifespan";
    case limit_kind::upper_gap: return "R_u";
    default: return "R_l";
    }
}

} // namespace tsr
