#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace leveltree {

// Levels are exact rationals so that ties are decidable.
using Rational = boost::rational<std::int64_t>;

// Accepts "p", "p/q" and finite decimals such as "-3.5".
Rational parse_rational(std::string_view text);

// "-3/2", "-2", "0".
std::string to_string(const Rational& r);

}  // namespace leveltree
