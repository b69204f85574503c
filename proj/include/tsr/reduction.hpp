#pragma once

#include "tsr/chain.hpp"
#include "tsr/filtration.hpp"
#include "tsr/orders.hpp"

#include <memory>
#include <optional>

namespace tsr {

enum class simplex_class { birth, terminal };

// Result of left-to-right column reduction of the boundary matrix for one
// simplex order. Columns live in position space: entry rows are positions in
// the order, the pivot is the largest one.
class reduced_filtration {
public:
    using column = std::vector<std::pair<int, std::uint32_t>>;

    reduced_filtration(std::shared_ptr<const simplicial_complex> K, simplex_order order,
                       field_spec field);

    const simplicial_complex& complex() const { return *K_; }
    const simplex_order& order() const { return order_; }
    const field_spec& field() const { return field_; }
    int size() const { return static_cast<int>(order_.seq.size()); }

    int id_at(int pos) const { return order_.seq[pos]; }
    int position_of(int id) const { return position_[id]; }

    const column& reduced_column(int pos) const { return columns_[pos]; }
    // Column of the negative simplex whose pivot is `pos`, or -1.
    int pivot_owner(int pos) const { return owner_[pos]; }

    simplex_class classify(int pos) const {
        return columns_[pos].empty() ? simplex_class::birth : simplex_class::terminal;
    }

    // Pairing (birth position, death position) plus unpaired positive positions.
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<int>& essential() const { return essential_; }

    // The reduced column of a terminal simplex as an id-space chain (the
    // canonical representative cycle it kills).
    chain column_as_chain(int pos) const;

private:
    std::shared_ptr<const simplicial_complex> K_;
    simplex_order order_;
    field_spec field_;
    std::vector<int> position_;
    std::vector<column> columns_;
    std::vector<int> owner_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> essential_;
};

reduced_filtration reduce(std::shared_ptr<const simplicial_complex> K, const simplex_order& order,
                          const field_spec& field);
reduced_filtration reduce(const filtration& f, const field_spec& field); // f-order

simplex_class classify_simplex(const reduced_filtration& R, const simplex& s);

// Position of the simplex terminating the class of alpha under R's order
// (the latest negative column in its unique echelon expression), or nullopt
// when the class survives forever.
std::optional<int> terminal_position(const reduced_filtration& R, const chain& alpha);

struct class_lifespan_result {
    rat a;                         // birth
    level b;                       // termination scale, nullopt = inf
    std::optional<int> terminal_id; // terminal simplex, present iff b finite
};

// Birth, termination scale and terminal simplex of a nonzero cycle. R must
// be the reduction of f's own order.
class_lifespan_result class_lifespan(const reduced_filtration& R, const filtration& f,
                                     const chain& alpha);

} // namespace tsr
