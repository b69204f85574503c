#include "tsr/simplex.hpp"

#include "tsr/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tsr {

namespace {

void check_canonical(const std::vector<int>& vs) {
    if (vs.empty()) throw validation_error("simplex must have at least one vertex");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0) throw validation_error("negative vertex id in simplex");
        if (i > 0 && vs[i] <= vs[i - 1])
            throw validation_error("simplex vertices must be strictly increasing");
    }
}

} // namespace

simplex::simplex(std::initializer_list<int> vs) : verts(vs) { check_canonical(verts); }

simplex::simplex(std::vector<int> vs) : verts(std::move(vs)) { check_canonical(verts); }

bool simplex::has_face(const simplex& other) const {
    return std::includes(verts.begin(), verts.end(), other.verts.begin(), other.verts.end());
}

std::vector<simplex> simplex::facets() const {
    std::vector<simplex> out;
    if (dim() == 0) return out;
    for (std::size_t skip = 0; skip < verts.size(); ++skip) {
        simplex face;
        face.verts.reserve(verts.size() - 1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (i != skip) face.verts.push_back(verts[i]);
        out.push_back(std::move(face));
    }
    return out;
}

bool canonical_less(const simplex& a, const simplex& b) {
    if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
    return a.verts < b.verts;
}

std::string format_simplex(const simplex& s) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < s.verts.size(); ++i) {
        if (i) out << ',';
        out << s.verts[i];
    }
    out << ']';
    return out.str();
}

simplex parse_simplex(const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.size() < 3 || s.front() != '[' || s.back() != ']')
        throw parse_error("malformed simplex literal '" + text + "'");
    std::vector<int> vs;
    std::string body = s.substr(1, s.size() - 2);
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::istringstream t(tok);
        int v;
        if (!(t >> v)) throw parse_error("malformed simplex literal '" + text + "'");
        std::string rest;
        if (t >> rest) throw parse_error("malformed simplex literal '" + text + "'");
        vs.push_back(v);
    }
    if (vs.empty()) throw parse_error("malformed simplex literal '" + text + "'");
    try {
        return simplex(std::move(vs));
    } catch (const validation_error& e) {
        throw parse_error(std::string(e.what()) + " in '" + text + "'");
    }
}

} // namespace tsr
