// Copyright 2026 The tugame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUGAME_RATIONAL_HPP
#define TUGAME_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "error.hpp"

namespace tugame {

/// Arbitrary-precision integer and exact fraction. The fraction is always
/// kept in lowest terms with a positive denominator, so equality and
/// ordering are exact.
using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline integer numerator_of(const rational& r) {
  return boost::multiprecision::numerator(r);
}

inline integer denominator_of(const rational& r) {
  return boost::multiprecision::denominator(r);
}

inline rational make_rational(long long num, long long den = 1) {
  if (den == 0) {
    throw error(errc::bad_number, "zero denominator");
  }
  if (den < 0) return rational(-integer(num), -integer(den));
  return rational(integer(num), integer(den));
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline integer pow10(unsigned e) {
  integer r = 1;
  for (unsigned k = 0; k < e; ++k) r *= 10;
  return r;
}

// Exponents beyond this are rejected rather than materialized.
inline constexpr int max_decimal_exponent = 400;

}  // namespace detail

/// Parses "p/q", an integer, or a decimal literal (optionally with an
/// exponent) straight from its digit text. Never goes through binary
/// floating point.
inline rational parse_rational(std::string_view text) {
  const std::string token(text);
  auto fail = [&]() -> rational {
    throw error(errc::bad_number, "cannot parse number '" + token + "'");
  };

  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
    const integer q{std::string(den)};
    if (q == 0) {
      throw error(errc::bad_number, "zero denominator in '" + token + "'");
    }
    const integer p{std::string(num)};
    return rational(negative ? integer(-p) : p, q);
  }

  std::string_view mantissa = s;
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view exp = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!detail::all_digits(exp) || exp.size() > 4) return fail();
    exponent = std::stoi(std::string(exp));
    if (exponent > detail::max_decimal_exponent) return fail();
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
    if (!detail::all_digits(frac_part)) return fail();
  }
  if (!detail::all_digits(int_part)) return fail();

  integer digits{std::string(int_part) + std::string(frac_part)};
  if (negative) digits = -digits;
  const int scale = exponent - static_cast<int>(frac_part.size());
  if (scale >= 0) {
    return rational(digits * detail::pow10(static_cast<unsigned>(scale)));
  }
  return rational(digits, detail::pow10(static_cast<unsigned>(-scale)));
}

/// Canonical exact form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Decimal approximation rounded half away from zero. Display only.
inline std::string to_decimal(const rational& r, unsigned places = 6) {
  integer num = numerator_of(r);
  const integer den = denominator_of(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  integer scaled = num * detail::pow10(places);
  integer q = scaled / den;
  integer rem = scaled % den;
  if (2 * rem >= den) ++q;

  std::string digits = q.str();
  if (digits.size() <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative && q != 0) out += '-';
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

}  // namespace tugame

#endif  // TUGAME_RATIONAL_HPP
