#pragma once

#include "tsr/complex.hpp"
#include "tsr/rational.hpp"
#include "tsr/simplex.hpp"

#include <iosfwd>
#include <map>
#include <memory>
#include <vector>

namespace tsr {

// An injective, face-monotone assignment of exact rational values to the
// simplices of a complex. Instances are immutable once validated; perturbed
// copies share the underlying complex.
class filtration {
public:
    const simplicial_complex& complex() const { return *K_; }
    const std::shared_ptr<const simplicial_complex>& complex_ptr() const { return K_; }

    const rat& value(int id) const { return values_[id]; }
    const rat& value(const simplex& s) const { return values_[K_->require(s)]; }
    const std::vector<rat>& values() const { return values_; }
    int size() const { return K_->size(); }

    // Simplex ids sorted by value; the induced simplex order of this filtration.
    const std::vector<int>& order() const { return order_; }
    // Position of each simplex in that order.
    const std::vector<int>& position() const { return position_; }

    friend filtration validate_filtration(std::shared_ptr<const simplicial_complex> K,
                                          std::vector<rat> values);

private:
    filtration() = default;

    std::shared_ptr<const simplicial_complex> K_;
    std::vector<rat> values_;
    std::vector<int> order_;
    std::vector<int> position_;
};

// Checks injectivity and face-monotonicity; throws validation_error with a
// MissingValue / DuplicateValue / MonotonicityViolation diagnostic.
filtration validate_filtration(std::shared_ptr<const simplicial_complex> K,
                               std::vector<rat> values);
filtration validate_filtration(std::shared_ptr<const simplicial_complex> K,
                               const std::map<simplex, rat>& values);

// ρ = min over σ ≠ τ of |f(σ) − f(τ)|; needs at least two simplices.
rat injectivity_radius(const filtration& f);

// True iff all pairwise absolute differences of values are distinct.
bool is_generic(const filtration& f);

// max over simplices of |f(σ) − g(σ)|; the filtrations must share a complex.
rat sup_distance(const filtration& f, const filtration& g);

bool same_complex(const filtration& f, const filtration& g);

// Text format: one simplex per line, "v0 v1 ... vk : value", '#' comments.
// The file must list a closed complex. Round-trips bit-exactly.
filtration read_filtration(std::istream& in);
filtration read_filtration_file(const std::string& path);
void write_filtration(std::ostream& out, const filtration& f);

} // namespace tsr
