#include "overgroup/rational.hpp"

#include <charconv>

#include "overgroup/omega.hpp"

namespace overgroup {

namespace {

std::int64_t parse_int(std::string_view text, std::size_t offset) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError("rational: expected integer", offset + static_cast<std::size_t>(ptr - first));
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("rational: empty", 0);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), 0), parse_int(text.substr(slash + 1), slash + 1));
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, 0));

  const bool negative = text.front() == '-';
  const std::string_view whole = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
  const std::string_view frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 15) throw ParseError("rational: bad fraction digits", dot + 1);
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::int64_t w = whole.empty() ? 0 : parse_int(whole, negative ? 1 : 0);
  if (frac.front() == '-' || frac.front() == '+') throw ParseError("rational: bad fraction digits", dot + 1);
  const std::int64_t f = parse_int(frac, dot + 1);
  const std::int64_t magnitude = w * den + f;
  return Rational(negative ? -magnitude : magnitude, den);
}

}  // namespace overgroup
