#include "tsr/chain.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tsr {

chain boundary_chain(const simplicial_complex& K, int id, const field_spec& F) {
    const simplex& s = K.at(id);
    chain out;
    out.dim = s.dim() - 1;
    if (s.dim() == 0) return out;
    std::uint32_t sign = 1; // (+1)^0
    for (std::size_t skip = 0; skip < s.verts.size(); ++skip) {
        simplex face;
        for (std::size_t i = 0; i < s.verts.size(); ++i)
            if (i != skip) face.verts.push_back(s.verts[i]);
        out.terms.emplace_back(K.require(face), sign);
        sign = F.neg(sign);
    }
    std::sort(out.terms.begin(), out.terms.end());
    return out;
}

chain boundary_chain(const simplicial_complex& K, const simplex& s, const field_spec& F) {
    return boundary_chain(K, K.require(s), F);
}

bool is_cycle(const simplicial_complex& K, const field_spec& F, const chain& c) {
    std::map<int, std::uint32_t> acc;
    for (const auto& [id, coeff] : c.terms)
        for (const auto& [face, fc] : boundary_chain(K, id, F).terms) {
            auto [it, fresh] = acc.emplace(face, 0);
            it->second = F.add(it->second, F.mul(coeff, fc));
            (void)fresh;
        }
    for (const auto& [face, coeff] : acc)
        if (coeff != 0) return false;
    return true;
}

chain parse_cycle(const simplicial_complex& K, const field_spec& F, const std::string& text) {
    std::map<int, std::uint32_t> acc;
    int dim = -1;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw parse_error("empty cycle literal");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        long long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            throw parse_error("expected '+' or '-' in cycle literal at position " +
                              std::to_string(i));
        }
        skip_ws();
        long long coeff = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            try {
                coeff = std::stoll(text.substr(start, i - start));
            } catch (const std::out_of_range&) {
                throw parse_error("coefficient too large in cycle literal");
            }
            skip_ws();
            if (i >= text.size() || text[i] != '*')
                throw parse_error("expected '*' after coefficient in cycle literal");
            ++i;
            skip_ws();
        }
        if (i >= text.size() || text[i] != '[')
            throw parse_error("expected simplex '[...]' in cycle literal at position " +
                              std::to_string(i));
        auto close = text.find(']', i);
        if (close == std::string::npos) throw parse_error("unterminated simplex in cycle literal");
        simplex s = parse_simplex(text.substr(i, close - i + 1));
        i = close + 1;

        if (dim < 0) dim = s.dim();
        if (s.dim() != dim)
            throw validation_error("cycle terms must share a dimension; got " +
                                   format_simplex(s));
        const int id = K.require(s);
        auto [it, fresh] = acc.emplace(id, 0);
        it->second = F.add(it->second, F.from_int(sign * coeff));
        (void)fresh;
        first = false;
    }
    if (first) throw parse_error("empty cycle literal");

    chain out;
    out.dim = dim;
    for (const auto& [id, coeff] : acc)
        if (coeff != 0) out.terms.emplace_back(id, coeff);
    return out;
}

std::string format_chain(const simplicial_complex& K, const chain& c) {
    if (c.zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [id, coeff] : c.terms) {
        if (!first) out << " + ";
        if (coeff != 1) out << coeff << '*';
        out << format_simplex(K.at(id));
        first = false;
    }
    return out.str();
}

} // namespace tsr
