#include "crosscap/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace crosscap {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument("bad integer in rational: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  const auto num = parse_int(text.substr(0, slash));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

}  // namespace crosscap
