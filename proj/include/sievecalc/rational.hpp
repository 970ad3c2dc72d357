#pragma once

#include <gmpxx.h>

#include <string>

#include "sievecalc/errors.hpp"

namespace sievecalc {

using Rational = mpq_class;

inline std::string rational_str(const Rational& r) {
  return r.get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

// Accepts "p/q", plain integers, and decimal strings like "0.45" (parsed
// exactly as 45/100).  Throws DOMAIN on malformed input or zero denominator.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error(Errc::domain, "empty rational");
  const auto bad = [&] { return Error(Errc::domain, "bad rational '" + s + "'"); };
  auto slash = s.find('/');
  auto dot = s.find('.');
  try {
    if (slash != std::string::npos) {
      if (dot != std::string::npos) throw bad();
      mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw bad();
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits == "+") throw bad();
      mpz_class num(digits);
      mpz_class den(1);
      for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(mpz_class(s));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

}  // namespace sievecalc
