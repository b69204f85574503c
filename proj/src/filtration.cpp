#include "tsr/filtration.hpp"

#include "tsr/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace tsr {

filtration validate_filtration(std::shared_ptr<const simplicial_complex> K,
                               std::vector<rat> values) {
    if (!K) throw validation_error("null complex");
    const int n = K->size();
    if (static_cast<int>(values.size()) != n)
        throw validation_error("MissingValue: expected " + std::to_string(n) +
                               " values, got " + std::to_string(values.size()));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[a] < values[b]; });
    for (int i = 1; i < n; ++i)
        if (values[order[i - 1]] == values[order[i]])
            throw validation_error("DuplicateValue: " + format_simplex(K->at(order[i - 1])) +
                                   " and " + format_simplex(K->at(order[i])) +
                                   " share value " + format_rational(values[order[i]]));

    for (int id = 0; id < n; ++id)
        for (int face : K->facets_of(id))
            if (values[face] > values[id])
                throw validation_error(
                    "MonotonicityViolation: " + format_simplex(K->at(face)) + " (" +
                    format_rational(values[face]) + ") above its coface " +
                    format_simplex(K->at(id)) + " (" + format_rational(values[id]) + ")");

    filtration f;
    f.K_ = std::move(K);
    f.values_ = std::move(values);
    f.order_ = std::move(order);
    f.position_.assign(n, 0);
    for (int pos = 0; pos < n; ++pos) f.position_[f.order_[pos]] = pos;
    return f;
}

filtration validate_filtration(std::shared_ptr<const simplicial_complex> K,
                               const std::map<simplex, rat>& values) {
    if (!K) throw validation_error("null complex");
    std::vector<rat> by_id(K->size());
    std::vector<bool> seen(K->size(), false);
    for (const auto& [s, v] : values) {
        auto id = K->find(s);
        if (!id)
            throw validation_error("value given for " + format_simplex(s) +
                                   " which is not in the complex");
        by_id[*id] = v;
        seen[*id] = true;
    }
    for (int id = 0; id < K->size(); ++id)
        if (!seen[id])
            throw validation_error("MissingValue: no value for " + format_simplex(K->at(id)));
    return validate_filtration(std::move(K), std::move(by_id));
}

rat injectivity_radius(const filtration& f) {
    const int n = f.size();
    if (n < 2) throw domain_error("SingleSimplex: injectivity radius undefined");
    const auto& order = f.order();
    rat rho = f.value(order[1]) - f.value(order[0]);
    for (int i = 2; i < n; ++i)
        rho = std::min(rho, rat(f.value(order[i]) - f.value(order[i - 1])));
    return rho;
}

bool is_generic(const filtration& f) {
    const int n = f.size();
    std::vector<rat> diffs;
    diffs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            diffs.push_back(abs(rat(f.value(i) - f.value(j))));
    std::sort(diffs.begin(), diffs.end());
    return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

rat sup_distance(const filtration& f, const filtration& g) {
    if (!same_complex(f, g))
        throw validation_error("filtrations live on different complexes");
    rat d = 0;
    for (int id = 0; id < f.size(); ++id)
        d = std::max(d, abs(rat(f.value(id) - g.value(id))));
    return d;
}

bool same_complex(const filtration& f, const filtration& g) {
    return f.complex_ptr() == g.complex_ptr() || f.complex() == g.complex();
}

filtration read_filtration(std::istream& in) {
    std::vector<simplex> simplices;
    std::vector<rat> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> verts;
        std::string tok;
        bool saw_colon = false;
        while (ls >> tok) {
            if (tok == ":") {
                saw_colon = true;
                break;
            }
            std::istringstream ts(tok);
            int v;
            std::string rest;
            if (!(ts >> v) || (ts >> rest))
                throw parse_error("line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
            verts.push_back(v);
        }
        if (verts.empty() && !saw_colon) continue; // blank or comment-only line
        if (!saw_colon)
            throw parse_error("line " + std::to_string(lineno) + ": missing ':'");
        std::string value_text;
        std::getline(ls, value_text);
        rat v;
        try {
            v = parse_rational(value_text);
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        try {
            simplices.emplace_back(std::move(verts));
        } catch (const validation_error& e) {
            throw validation_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        values.push_back(std::move(v));
    }
    if (simplices.empty()) throw validation_error("empty filtration file");

    std::map<simplex, rat> by_simplex;
    for (std::size_t i = 0; i < simplices.size(); ++i)
        if (!by_simplex.emplace(simplices[i], values[i]).second)
            throw validation_error("duplicate simplex " + format_simplex(simplices[i]));

    auto K = std::make_shared<simplicial_complex>(simplicial_complex::from_simplices(simplices));
    return validate_filtration(std::move(K), by_simplex);
}

filtration read_filtration_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_filtration(in);
}

void write_filtration(std::ostream& out, const filtration& f) {
    const auto& K = f.complex();
    for (int id = 0; id < K.size(); ++id) {
        const auto& vs = K.at(id).verts;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) out << ' ';
            out << vs[i];
        }
        out << " : " << format_rational(f.value(id)) << '\n';
    }
}

} // namespace tsr
