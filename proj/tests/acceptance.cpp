// Acceptance suite: exact reproduction of the worked examples plus the
// property suites, one pass/fail line per criterion.

#include "support/fixtures.hpp"

#include "tsr/errors.hpp"
#include "tsr/rigidity.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace tsr;

namespace {

const field_spec F2(2);
constexpr int kThreads = 2;

struct outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        pass = false;
        if (!note.empty()) note += "; ";
        note += why;
    }
    void require(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

std::set<simplex> named_members(const filtration& f, const sigma_result& s) {
    std::set<simplex> out;
    for (int id : s.members) out.insert(f.complex().at(id));
    return out;
}

chain cycle(const filtration& f, const std::string& literal) {
    return parse_cycle(f.complex(), F2, literal);
}

// --- the shared fuzz corpus (criteria 4, 5, 6) -------------------------

struct fuzz_case {
    filtration f;
    std::vector<chain> alphas; // reduced column of each death simplex
};

std::vector<fuzz_case> fuzz_corpus(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<fuzz_case> corpus;
    while (static_cast<int>(corpus.size()) < count) {
        filtration f = fixtures::random_filtration(rng, 9);
        auto R = reduce(f, F2);
        if (R.pairs().empty()) continue;
        fuzz_case c{f, {}};
        for (const auto& [birth, death] : R.pairs())
            c.alphas.push_back(R.column_as_chain(death));
        corpus.push_back(std::move(c));
    }
    return corpus;
}

// --- criteria ----------------------------------------------------------

outcome criterion_example6_jump() {
    outcome o;
    auto tri = fixtures::tri();
    auto alpha = cycle(tri, "[1] - [0]");
    for (const rat& eps : {rat(1, 2), rat(3, 4), rat(1)}) {
        auto s = sigma_epsilon(tri, alpha, F2, eps, 1000000, kThreads);
        o.require(s.members.size() == 1,
                  "|Sigma| != 1 at eps = " + format_rational(eps));
    }
    auto s = sigma_epsilon(tri, alpha, F2, rat(101, 100), 1000000, kThreads);
    o.require(named_members(tri, s) == std::set<simplex>{{0, 1}, {1, 2}, {0, 2}},
              "Sigma at 101/100 is not {AB, BC, AC}");
    return o;
}

outcome criterion_cycle_graphs() {
    outcome o;
    for (int n = 1; n <= 3; ++n) {
        auto f = fixtures::cycle_graph(n + 2);
        auto report = breaking_analysis(f, cycle(f, "[1] - [0]"), F2, 10000000, kThreads);
        if (!report.t0) {
            o.fail("no break found for n = " + std::to_string(n));
            continue;
        }
        o.require(*report.t0 == rat(n + 1, 2),
                  "t0 != (n+1)/2 for n = " + std::to_string(n));
        o.require(static_cast<int>(report.new_terminal_ids.size()) == n + 1,
                  "|Sigma| does not jump from 1 to " + std::to_string(n + 2) + " at n = " +
                      std::to_string(n));
    }
    return o;
}

outcome criterion_figdifference() {
    outcome o;
    auto f = fixtures::edge();
    auto alpha = cycle(f, "[1] - [0]");
    for (const rat& eps :
         {rat(1, 10), rat(1, 4), rat(1, 2), rat(3, 4), rat(9, 10), rat(99, 100)}) {
        auto s = sigma_epsilon(f, alpha, F2, eps, 100000, 1);
        o.require(named_members(f, s) == std::set<simplex>{{0, 1}},
                  "Sigma != {AB} at eps = " + format_rational(eps));
    }
    // the pairing is not rigid: switching A and B moves the birth vertex
    auto R_f = reduce(f, F2);
    o.require(f.complex().at(R_f.id_at(R_f.pairs()[0].first)) == simplex{1},
              "f-pairing should be (B, AB)");
    filtration g = switch_pair(f, simplex{0}, simplex{1}, rat(3, 4));
    auto R_g = reduce(g, F2);
    o.require(R_g.pairs().size() == 1, "g should have one pair");
    o.require(g.complex().at(R_g.id_at(R_g.pairs()[0].first)) == simplex{0},
              "g-pairing should be (A, AB)");
    return o;
}

outcome criterion_certificate_soundness(const std::vector<fuzz_case>& corpus) {
    outcome o;
    int checked = 0;
    for (const auto& c : corpus) {
        for (const auto& alpha : c.alphas) {
            auto cert = rigidity_radius(c.f, alpha, F2);
            if (!(cert.epsilon_star > 0 && 2 * cert.epsilon_star <= cert.b - cert.a))
                continue; // only certificates with epsilon* inside D = (0, (b-a)/2]
            auto s = sigma_epsilon(c.f, alpha, F2, cert.epsilon_star, 10000000, kThreads);
            ++checked;
            if (s.members.size() != 1) {
                o.fail("|Sigma(eps*)| = " + std::to_string(s.members.size()) +
                       " for a certified class");
                return o;
            }
        }
    }
    o.note = std::to_string(checked) + " certificates";
    return o;
}

outcome criterion_threshold_lemmas(const std::vector<fuzz_case>& corpus) {
    outcome o;
    int breaks = 0, steps = 0;
    for (const auto& c : corpus) {
        const auto thresholds = rigidity_thresholds(c.f);
        for (const auto& alpha : c.alphas) {
            auto report = breaking_analysis(c.f, alpha, F2, 10000000, kThreads);
            if (report.t0) {
                ++breaks;
                if (std::find(thresholds.begin(), thresholds.end(), *report.t0) ==
                    thresholds.end()) {
                    o.fail("observed break value is not a rigidity threshold");
                    return o;
                }
                // direct bracketing of the jump
                auto at = sigma_epsilon(c.f, alpha, F2, *report.t0, 10000000, kThreads);
                auto above =
                    sigma_epsilon(c.f, alpha, F2, report.probe_eps, 10000000, kThreads);
                if (at.members.size() != 1 || above.members.size() <= 1) {
                    o.fail("break not bracketed by (t0, probe]");
                    return o;
                }
            }
            // right-closed constancy: Sigma at a threshold equals Sigma just below
            const auto R = reduce(c.f, F2);
            const auto ls = class_lifespan(R, c.f, alpha);
            const rat d_top = (*ls.b - ls.a) / 2;
            rat prev = 0;
            for (const rat& t : thresholds) {
                if (t > d_top) break;
                const rat below = (prev + t) / 2;
                auto at_t = sigma_epsilon(c.f, alpha, F2, t, 10000000, kThreads);
                auto just_below = sigma_epsilon(c.f, alpha, F2, below, 10000000, kThreads);
                ++steps;
                if (at_t.members != just_below.members) {
                    o.fail("Sigma at threshold " + format_rational(t) +
                           " differs from Sigma just below it");
                    return o;
                }
                prev = t;
            }
        }
    }
    o.note = std::to_string(breaks) + " breaks, " + std::to_string(steps) + " steps";
    return o;
}

outcome criterion_propstep2(const std::vector<fuzz_case>& corpus) {
    outcome o;

    auto check_break = [&](const filtration& f, const chain& alpha,
                           const breaking_report& report) {
        const auto& K = f.complex();
        const rat two_t0 = 2 * *report.t0;

        // unique gap pair of a generic filtration
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < K.size(); ++i)
            for (int j = 0; j < K.size(); ++j)
                if (f.value(j) - f.value(i) == two_t0) pairs.emplace_back(i, j);
        if (pairs.size() != 1) {
            o.fail("gap pair at 2*t0 is not unique on a generic filtration");
            return;
        }
        auto [lo, hi] = pairs.front();
        if (report.delta1_id != lo && report.delta1_id != hi) {
            o.fail("Delta1 is not an endpoint of the 2*t0 gap pair");
            return;
        }
        const int partner = report.delta1_id == lo ? hi : lo;
        if (!report.partner_id || *report.partner_id != partner) {
            o.fail("partner prediction does not match the gap pair");
            return;
        }
        // maximality: no coface enters before f(Delta1) + 2*t0
        for (int cof : K.upper_set(report.delta1_id))
            if (cof != report.delta1_id &&
                f.value(cof) < f.value(report.delta1_id) + two_t0) {
                o.fail("Delta1 has a coface below f(Delta1) + 2*t0");
                return;
            }
        // {Delta1, partner} inside Sigma just above t0
        if (std::find(report.new_terminal_ids.begin(), report.new_terminal_ids.end(),
                      partner) == report.new_terminal_ids.end()) {
            o.fail("partner missing from Sigma just above t0");
            return;
        }
        const auto R = reduce(f, F2);
        const auto cls = R.classify(R.position_of(partner));
        if (report.delta1_id == lo) {
            // partner above: independently critical, partner creates a class
            if (report.classification != criticality::independent ||
                cls != simplex_class::birth)
                o.fail("lower-endpoint break not classified independent/birth");
        } else {
            if (report.classification != criticality::sequential ||
                cls != simplex_class::terminal)
                o.fail("upper-endpoint break not classified sequential/terminal");
        }
        (void)alpha;
    };

    int generic_breaks = 0;
    for (const auto& c : corpus) {
        if (!is_generic(c.f)) continue;
        for (const auto& alpha : c.alphas) {
            auto report = breaking_analysis(c.f, alpha, F2, 10000000, kThreads);
            if (!report.t0) continue;
            ++generic_breaks;
            check_break(c.f, alpha, report);
            if (!o.pass) return o;
        }
    }

    // pinned reproductions
    auto p3g = fixtures::path3g();
    auto rg = breaking_analysis(p3g, cycle(p3g, "[2] - [0]"), F2, 1000000, kThreads);
    o.require(rg.t0 && *rg.t0 == rat(7, 10) &&
                  p3g.complex().at(rg.delta1_id) == simplex{1, 2} && rg.partner_id &&
                  p3g.complex().at(*rg.partner_id) == simplex{0, 1} &&
                  rg.classification == criticality::sequential,
              "path3g does not reproduce (7/10, BC, AB, sequential)");

    auto tri = fixtures::tri();
    auto rt = breaking_analysis(tri, cycle(tri, "[1] - [0]"), F2, 1000000, kThreads);
    o.require(rt.t0 && *rt.t0 == rat(1) && tri.complex().at(rt.delta1_id) == simplex{0, 1} &&
                  rt.partner_id && tri.complex().at(*rt.partner_id) == simplex{0, 2} &&
                  rt.classification == criticality::independent,
              "tri does not reproduce (1, AB, AC, independent)");

    if (o.pass) o.note = std::to_string(generic_breaks) + " generic breaks";
    return o;
}

outcome criterion_stability() {
    outcome o;
    std::mt19937_64 rng(2026);
    int done = 0;
    while (done < 100) {
        filtration f = fixtures::random_filtration(rng, 9);
        const rat eps = injectivity_radius(f) * rat(1 + static_cast<int>(rng() % 6), 3);
        filtration g = fixtures::random_perturbation(rng, f, eps);
        auto Rf = reduce(f, F2), Rg = reduce(g, F2);
        for (int n = 0; n <= f.complex().dim(); ++n) {
            const rat d = bottleneck_distance(barcode(Rf, f, n), barcode(Rg, g, n));
            if (d > eps) {
                o.fail("bottleneck distance " + format_rational(d) + " exceeds eps " +
                       format_rational(eps) + " in dimension " + std::to_string(n));
                return o;
            }
        }
        ++done;
    }
    o.note = "100 pairs";
    return o;
}

outcome criterion_barcode_rigidity() {
    outcome o;
    auto f = fixtures::trif();
    auto bars = barcode(reduce(f, F2), f, 1);
    if (bars.size() != 1 || !(bars[0].a == rat(5) && bars[0].b == level(rat(6)))) {
        o.fail("trif dim-1 barcode is not {[5,6)}");
        return o;
    }
    const bar designated = bars[0];
    const rat eps(1, 5);
    auto verdict = bar_rigidity_check(f, F2, designated, eps);
    o.require(verdict.rigid, "hypotheses fail on trif [5,6) at eps = 1/5");

    std::mt19937_64 rng(2027);
    for (int trial = 0; trial < 50 && o.pass; ++trial) {
        filtration g = fixtures::random_perturbation(rng, f, eps);
        bar m = matched_bar(f, g, F2, designated, eps);
        o.require(m.death_id && g.complex().at(*m.death_id) == simplex{0, 1, 2},
                  "matched terminal simplex is not ABC");
        o.require(m.b && abs(rat(*m.b - 6)) <= eps, "matched endpoint drifted beyond eps");
    }
    return o;
}

outcome criterion_reduction_oracle() {
    outcome o;
    std::mt19937_64 rng(2028);
    std::vector<filtration> instances{fixtures::edge(), fixtures::path3(), fixtures::path3g(),
                                      fixtures::tri(), fixtures::trif()};
    for (int i = 0; i < 100; ++i) instances.push_back(fixtures::random_filtration(rng, 9));

    for (const auto& f : instances) {
        auto R = reduce(f, F2);
        for (int n = 0; n <= f.complex().dim(); ++n) {
            auto bars = barcode(R, f, n);
            for (int id = 0; id < f.size(); ++id) {
                const rat r = f.value(id);
                if (fixtures::bars_alive(bars, r) != fixtures::homology_rank(f, F2, r, n)) {
                    o.fail("bar count disagrees with dense-rank homology");
                    return o;
                }
            }
        }
    }
    o.note = std::to_string(instances.size()) + " instances";
    return o;
}

} // namespace

int main() {
    struct entry {
        int id;
        const char* label;
        double budget_ms;
        std::function<outcome()> run;
    };

    auto corpus = fuzz_corpus(200, 2025);

    const std::vector<entry> criteria{
        {1, "Example-6 jump 1 -> 3 on tri", 1000, criterion_example6_jump},
        {2, "cycle-graph jump 1 -> n+2 (n = 1, 2, 3)", 30000, criterion_cycle_graphs},
        {3, "rigid terminal vs unstable pairing on edge", 5000, criterion_figdifference},
        {4, "certificate soundness over the fuzz corpus", 300000,
         [&] { return criterion_certificate_soundness(corpus); }},
        {5, "threshold and right-closedness lemmas", 300000,
         [&] { return criterion_threshold_lemmas(corpus); }},
        {6, "first-break structure on generic instances", 300000,
         [&] { return criterion_propstep2(corpus); }},
        {7, "stability of barcodes under perturbation", 120000, criterion_stability},
        {8, "matched-bar rigidity on trif", 10000, criterion_barcode_rigidity},
        {9, "reduction agrees with dense-rank homology", 120000, criterion_reduction_oracle},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (ms > c.budget_ms) o.fail("over time budget");
        if (!o.pass) ++failures;
        std::printf("criterion %d: %s  %s (%.0f ms)%s%s\n", c.id, o.pass ? "PASS" : "FAIL",
                    c.label, ms, o.note.empty() ? "" : " -- ", o.note.c_str());
        std::fflush(stdout);
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 9 criteria pass\n");
    return 0;
}
