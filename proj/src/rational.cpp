#include "leveltree/rational.hpp"

#include <charconv>

#include "leveltree/errors.hpp"

namespace leveltree {
namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorKind::kParse, "not a rational number: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) fail(ErrorKind::kParse, "zero denominator: '" + std::string(text) + "'");
    return Rational(parse_int(s.substr(0, slash), text), den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    if (frac.size() > 15) fail(ErrorKind::kParse, "too many decimals: '" + std::string(text) + "'");
    std::string digits(s.substr(0, dot));
    bool negative = !digits.empty() && digits.front() == '-';
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    std::int64_t ip = parse_int(digits, text);
    std::int64_t fp = frac.empty() ? 0 : parse_int(frac, text);
    if (fp < 0) fail(ErrorKind::kParse, "not a rational number: '" + std::string(text) + "'");
    std::int64_t num = (ip < 0 ? -ip : ip) * scale + fp;
    return Rational(negative ? -num : num, scale);
  }
  return Rational(parse_int(s, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace leveltree
