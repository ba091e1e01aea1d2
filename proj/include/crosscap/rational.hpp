#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace crosscap {

/// Exact positions along edges. All geometric quantities in the toolkit are
/// rationals; only the SVG renderer converts to floating point, for drawing.
using Rational = boost::rational<std::int64_t>;

/// "n/d" in lowest terms (denominator always written, "1/2", "3/1").
std::string to_string(const Rational& r);

/// Parses "n/d" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace crosscap
