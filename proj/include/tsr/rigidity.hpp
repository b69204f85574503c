#pragma once

#include "tsr/barcode.hpp"
#include "tsr/perturb.hpp"

#include <map>
#include <optional>

namespace tsr {

// The exact set Σ_ε of terminal simplices of a class attainable over all
// injective ε-perturbations of f, with one witness order per member.
struct sigma_result {
    rat eps;
    std::vector<int> members; // terminal simplex ids, canonical order
    std::map<int, simplex_order> witness; // first witness in enumeration order
    std::map<int, std::vector<simplex_order>> all_witnesses; // only when requested
    std::uint64_t orders_examined = 0;
};

// Enumerates every ε-realizable order and collects the terminal simplex of
// alpha under each. threads > 1 splits the enumeration into disjoint prefix
// subtrees; merged output is identical to the serial run.
sigma_result sigma_epsilon(const filtration& f, const chain& alpha, const field_spec& F,
                           const rat& eps, std::uint64_t cap, int threads = 1,
                           bool collect_all_witnesses = false);

// Sorted set {|f(σ)−f(τ)|/2 : σ ≠ τ}. Every discontinuity of ε ↦ Σ_ε and
// ε ↦ Π_ε lies in this set.
std::vector<rat> rigidity_thresholds(const filtration& f);

struct r_bounds_result {
    level upper; // min gap |f(τ)−b| over birth (n+1)-simplices above b
    level lower; // min gap |f(τ)−b| over terminal (n+1)-simplices below b
};

// The barcode-visible gaps bounding terminal rigidity around termination
// level b of a dimension-n class.
r_bounds_result r_bounds(const filtration& f, const reduced_filtration& R, const rat& b, int n);

enum class limit_kind { lifespan, upper_gap, lower_gap };

struct rigidity_certificate {
    rat a;
    rat b;
    level r_upper;
    level r_lower;
    rat epsilon_star; // ½·min{b−a, R_u, R_l}; valid inclusively
    std::vector<limit_kind> limiting;
    std::optional<int> terminal_id;
};

// Certified radius of terminal rigidity for the class of alpha.
rigidity_certificate rigidity_radius(const filtration& f, const chain& alpha,
                                     const field_spec& F);

enum class criticality { sequential, independent, inconclusive };

struct breaking_report {
    std::optional<rat> t0; // last threshold with |Σ|=1; nullopt = rigid on all of D
    int delta1_id = -1;    // the unique terminal simplex at and below t0
    std::vector<int> new_terminal_ids;      // Σ just above t0, minus Δ1
    std::optional<int> partner_id;          // predicted Δ2 when unique
    std::vector<int> partner_candidate_ids; // all simplices at f(Δ1) ± 2·t0
    std::optional<criticality> classification;
    rat probe_eps; // where Σ was sampled just above t0
};

// Scans the rigidity thresholds inside D = (0, (b−a)/2] and locates the first
// break of |Σ| = 1, classifying the critical pair.
breaking_report breaking_analysis(const filtration& f, const chain& alpha, const field_spec& F,
                                  std::uint64_t cap, int threads = 1);

struct bar_rigidity_verdict {
    bool lifespan_ok = false;   // ε < (b−a)/4
    bool separation_ok = false; // every other bar has a_i > a+2ε or b_i < b−2ε
    bool bounds_ok = false;     // ε ≤ ½·min{R_u, R_l}
    std::vector<bar> separation_violations;
    level r_upper;
    level r_lower;
    bool rigid = false;
};

// Literal evaluation of the barcode-level rigidity hypotheses for one finite
// bar of barcode(f, n); infinite bars in the same dimension fail the
// b_i-disjunct and can only pass via their left endpoint.
bar_rigidity_verdict bar_rigidity_check(const filtration& f, const field_spec& F,
                                        const bar& designated, const rat& eps);

// Resolves the bar of g matched to `designated` through the termination scale
// of the designated bar's representative cycle. Requires ‖f−g‖∞ ≤ ε and the
// bar_rigidity_check hypotheses.
bar matched_bar(const filtration& f, const filtration& g, const field_spec& F,
                const bar& designated, const rat& eps);

std::string to_string(criticality c);
std::string to_string(limit_kind k);

} // namespace tsr
