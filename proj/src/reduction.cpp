#include "tsr/reduction.hpp"

#include "tsr/errors.hpp"

#include <algorithm>

namespace tsr {

namespace {

using column = reduced_filtration::column;

// out -= lambda * other, sparse merge in position space.
column axpy(const field_spec& F, const column& a, std::uint32_t lambda, const column& b) {
    column out;
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

} // namespace

reduced_filtration::reduced_filtration(std::shared_ptr<const simplicial_complex> K,
                                       simplex_order order, field_spec field)
    : K_(std::move(K)), order_(std::move(order)), field_(field) {
    if (!is_linear_extension(*K_, order_))
        throw validation_error("OrderNotLinearExtension: a simplex precedes one of its faces");
    const int n = size();
    position_.assign(n, -1);
    for (int pos = 0; pos < n; ++pos) position_[order_.seq[pos]] = pos;

    columns_.assign(n, {});
    owner_.assign(n, -1);
    for (int pos = 0; pos < n; ++pos) {
        column col;
        for (const auto& [id, coeff] : boundary_chain(*K_, order_.seq[pos], field_).terms)
            col.emplace_back(position_[id], coeff);
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            const int pivot = col.back().first;
            const int other = owner_[pivot];
            if (other < 0) break;
            const std::uint32_t lambda =
                field_.mul(col.back().second, field_.inv(columns_[other].back().second));
            col = axpy(field_, col, lambda, columns_[other]);
        }
        if (!col.empty()) {
            owner_[col.back().first] = pos;
            pairs_.emplace_back(col.back().first, pos);
        }
        columns_[pos] = std::move(col);
    }
    for (int pos = 0; pos < n; ++pos)
        if (columns_[pos].empty() && owner_[pos] < 0) essential_.push_back(pos);
    std::sort(pairs_.begin(), pairs_.end());
}

chain reduced_filtration::column_as_chain(int pos) const {
    chain out;
    const auto& col = columns_[pos];
    out.dim = K_->at(order_.seq[pos]).dim() - 1;
    for (const auto& [p, coeff] : col) out.terms.emplace_back(order_.seq[p], coeff);
    std::sort(out.terms.begin(), out.terms.end());
    return out;
}

reduced_filtration reduce(std::shared_ptr<const simplicial_complex> K, const simplex_order& order,
                          const field_spec& field) {
    return reduced_filtration(std::move(K), order, field);
}

reduced_filtration reduce(const filtration& f, const field_spec& field) {
    return reduced_filtration(f.complex_ptr(), order_of(f), field);
}

simplex_class classify_simplex(const reduced_filtration& R, const simplex& s) {
    return R.classify(R.position_of(R.complex().require(s)));
}

namespace {

column to_positions(const reduced_filtration& R, const chain& alpha) {
    column v;
    for (const auto& [id, coeff] : alpha.terms) v.emplace_back(R.position_of(id), coeff);
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

std::optional<int> terminal_position(const reduced_filtration& R, const chain& alpha) {
    const field_spec& F = R.field();
    column v = to_positions(R, alpha);
    int latest = -1;
    while (!v.empty()) {
        const int pivot = v.back().first;
        const int j = R.pivot_owner(pivot);
        if (j < 0) return std::nullopt; // pivot never cancelled: the class survives
        const auto& col = R.reduced_column(j);
        v = axpy(F, v, F.mul(v.back().second, F.inv(col.back().second)), col);
        latest = std::max(latest, j);
    }
    return latest;
}

class_lifespan_result class_lifespan(const reduced_filtration& R, const filtration& f,
                                     const chain& alpha) {
    if (alpha.zero()) throw validation_error("ZeroChain: the zero chain has no lifespan");
    if (!is_cycle(R.complex(), R.field(), alpha))
        throw validation_error("NotACycle: the chain has nonzero boundary");
    if (!(order_of(f) == R.order()))
        throw validation_error("class_lifespan requires the reduction of f's own order");

    class_lifespan_result out;

    if (auto term = terminal_position(R, alpha)) {
        out.terminal_id = R.id_at(*term);
        out.b = f.value(*out.terminal_id);
    }

    // Birth: lower the pivot through negative columns already present at the
    // cycle's creation level. The loop cannot cancel alpha completely (a cycle
    // is never a boundary the moment its top simplex arrives).
    const field_spec& F = R.field();
    column v = to_positions(R, alpha);
    const int creation = v.back().first;
    while (true) {
        const int pivot = v.back().first;
        const int j = R.pivot_owner(pivot);
        if (j < 0 || j > creation) break;
        const auto& col = R.reduced_column(j);
        v = axpy(F, v, F.mul(v.back().second, F.inv(col.back().second)), col);
        if (v.empty())
            throw domain_error("internal: cycle became a boundary below its creation level");
    }
    out.a = f.value(R.id_at(v.back().first));
    return out;
}

} // namespace tsr
