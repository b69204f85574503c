#include "tsr/rational.hpp"

#include "tsr/errors.hpp"

#include <cctype>

namespace tsr {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

rat parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw parse_error("empty rational literal");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(s.begin());
    }
    if (s.empty()) throw parse_error("malformed rational literal '" + text + "'");

    rat value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw parse_error("malformed rational literal '" + text + "'");
        bigint d(den);
        if (d == 0) throw parse_error("zero denominator in '" + text + "'");
        value = rat(bigint(num), d);
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
            throw parse_error("malformed rational literal '" + text + "'");
        bigint den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        value = rat(bigint(ip) * den + (fp.empty() ? bigint(0) : bigint(fp)), den);
    } else {
        if (!all_digits(s)) throw parse_error("malformed rational literal '" + text + "'");
        value = rat(bigint(s));
    }
    return negative ? rat(-value) : value;
}

std::string format_rational(const rat& x) {
    std::string out = numerator(x).str();
    if (denominator(x) != 1) out += "/" + denominator(x).str();
    return out;
}

std::string format_level(const level& x) { return x ? format_rational(*x) : "inf"; }

} // namespace tsr
