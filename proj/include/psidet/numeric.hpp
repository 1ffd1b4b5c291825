/*
 * Exact number types: arbitrary-precision integers and rationals on top of
 * GMP's C++ classes, plus parsing/printing helpers used by the JSON layer.
 */
#pragma once

#include <gmpxx.h>

#include <string>

#include "psidet/errors.hpp"

namespace psidet {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
  Rat c(v);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "3", "-3", "3/2", "-3/2" with optional surrounding spaces.
inline Rat parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  require_input(!s.empty(), "empty rational literal");
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw_input("bad rational literal: '" + text + "'");
  }
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

} // namespace psidet
