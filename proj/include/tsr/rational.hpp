#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace tsr {

// All filtration values, perturbation sizes and thresholds are exact
// rationals. Discontinuities sit at exact half-differences of filtration
// values, so floating point would corrupt open/closed interval boundaries.
// Expression templates are off so arithmetic plays well with std::min/max.
using rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using bigint =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

// A possibly-infinite level: nullopt stands for +inf.
using level = std::optional<rat>;

// Accepts integer ("3", "-7"), fraction ("7/2") and decimal ("3.5") literals.
rat parse_rational(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string format_rational(const rat& x);

// Same as format_rational, with "inf" for the unbounded level.
std::string format_level(const level& x);

inline bool level_less(const level& a, const level& b) {
    if (!b) return static_cast<bool>(a);
    if (!a) return false;
    return *a < *b;
}

inline level level_min(const level& a, const level& b) { return level_less(a, b) ? a : b; }

} // namespace tsr
