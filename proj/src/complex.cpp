#include "tsr/complex.hpp"

#include "tsr/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tsr {

simplicial_complex::simplicial_complex(std::vector<simplex> sorted)
    : simplices_(std::move(sorted)) {
    const int n = size();
    facets_.assign(n, {});
    cofacets_.assign(n, {});
    std::map<simplex, int> index;
    for (int id = 0; id < n; ++id) index.emplace(simplices_[id], id);
    for (int id = 0; id < n; ++id) {
        dim_ = std::max(dim_, simplices_[id].dim());
        for (const simplex& face : simplices_[id].facets()) {
            auto it = index.find(face);
            if (it == index.end())
                throw validation_error("complex not closed under faces: missing " +
                                       format_simplex(face) + ", a facet of " +
                                       format_simplex(simplices_[id]));
            facets_[id].push_back(it->second);
            cofacets_[it->second].push_back(id);
        }
    }
}

simplicial_complex simplicial_complex::closure(const std::vector<simplex>& generators) {
    if (generators.empty()) throw validation_error("no generators given");
    std::set<simplex> seen;
    for (const simplex& g : generators)
        if (!seen.insert(g).second)
            throw validation_error("duplicate generator " + format_simplex(g));

    std::set<simplex> all;
    std::vector<simplex> stack(generators);
    while (!stack.empty()) {
        simplex s = std::move(stack.back());
        stack.pop_back();
        if (!all.insert(s).second) continue;
        for (simplex& face : s.facets()) stack.push_back(std::move(face));
    }
    return simplicial_complex(std::vector<simplex>(all.begin(), all.end()));
}

simplicial_complex simplicial_complex::from_simplices(const std::vector<simplex>& simplices) {
    std::set<simplex> all;
    for (const simplex& s : simplices)
        if (!all.insert(s).second)
            throw validation_error("duplicate simplex " + format_simplex(s));
    return simplicial_complex(std::vector<simplex>(all.begin(), all.end()));
}

std::optional<int> simplicial_complex::find(const simplex& s) const {
    auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s, canonical_less);
    if (it != simplices_.end() && *it == s)
        return static_cast<int>(it - simplices_.begin());
    return std::nullopt;
}

int simplicial_complex::require(const simplex& s) const {
    if (auto id = find(s)) return *id;
    throw validation_error("SimplexNotInComplex: " + format_simplex(s));
}

std::vector<int> simplicial_complex::upper_set(int id) const {
    std::vector<int> out;
    const simplex& s = simplices_[id];
    for (int t = 0; t < size(); ++t)
        if (simplices_[t].has_face(s)) out.push_back(t);
    return out;
}

std::vector<int> simplicial_complex::lower_set(int id) const {
    std::vector<int> out;
    const simplex& s = simplices_[id];
    for (int t = 0; t <= id; ++t)
        if (s.has_face(simplices_[t])) out.push_back(t);
    return out;
}

std::vector<simplex> upper_set(const simplicial_complex& K, const simplex& s) {
    std::vector<simplex> out;
    for (int id : K.upper_set(K.require(s))) out.push_back(K.at(id));
    return out;
}

std::vector<simplex> lower_set(const simplicial_complex& K, const simplex& s) {
    std::vector<simplex> out;
    for (int id : K.lower_set(K.require(s))) out.push_back(K.at(id));
    return out;
}

} // namespace tsr
