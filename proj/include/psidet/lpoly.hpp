/*
 * Univariate polynomials in the symbol L with arbitrary-precision integer
 * coefficients.  Internally a Laurent representation (coefficient vector plus
 * lowest exponent) so intermediate computations may dip below degree zero;
 * the public entry points reject negative exponents where the contract
 * requires honest polynomials (evaluation, printing of final classes).
 *
 * Includes exact division, a display-only factorizer that peels the atoms
 * L, L-1, L+1, L^2+L+1, and a small expression parser used to state golden
 * values in tests and fixtures readably.
 */
#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "psidet/errors.hpp"
#include "psidet/numeric.hpp"

namespace psidet {

class LPoly {
public:
  LPoly() = default;

  static LPoly zero() { return LPoly(); }

  static LPoly constant(const Int& c) {
    LPoly p;
    if (c != 0) {
      p.low_ = 0;
      p.c_ = {c};
    }
    return p;
  }

  static LPoly one() { return constant(1); }

  // c * L^e  (e may be negative: internal Laurent use only)
  static LPoly term(const Int& c, long e) {
    LPoly p;
    if (c != 0) {
      p.low_ = e;
      p.c_ = {c};
    }
    return p;
  }

  static LPoly var() { return term(1, 1); }

  bool is_zero() const { return c_.empty(); }
  long lowest() const { return c_.empty() ? 0 : low_; }
  long degree() const { return c_.empty() ? 0 : low_ + static_cast<long>(c_.size()) - 1; }
  bool is_laurent() const { return !c_.empty() && low_ < 0; }

  Int coefficient(long e) const {
    if (c_.empty() || e < low_ || e > degree()) return Int(0);
    return c_[static_cast<size_t>(e - low_)];
  }

  bool operator==(const LPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
  bool operator!=(const LPoly& o) const { return !(*this == o); }

  friend LPoly operator+(const LPoly& a, const LPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.low_, b.low_);
    long hi = std::max(a.degree(), b.degree());
    LPoly r;
    r.low_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo + 1), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[static_cast<size_t>(a.low_ - lo) + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[static_cast<size_t>(b.low_ - lo) + i] += b.c_[i];
    r.normalize();
    return r;
  }

  friend LPoly operator-(const LPoly& a, const LPoly& b) { return a + b.negated(); }

  LPoly negated() const {
    LPoly r(*this);
    for (Int& x : r.c_) x = -x;
    return r;
  }
  LPoly operator-() const { return negated(); }

  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.is_zero() || b.is_zero()) return LPoly();
    LPoly r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
  }

  LPoly& operator+=(const LPoly& o) { return *this = *this + o; }
  LPoly& operator-=(const LPoly& o) { return *this = *this - o; }
  LPoly& operator*=(const LPoly& o) { return *this = *this * o; }

  LPoly pow(unsigned e) const {
    LPoly r = one();
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  // Quotient if the division is exact, otherwise no value.  Both operands
  // must be honest polynomials (no negative exponents).
  static bool try_divide(const LPoly& a, const LPoly& d, LPoly& quot) {
    require_input(!d.is_zero(), "LPoly division by zero");
    require_input(!a.is_laurent() && !d.is_laurent(), "LPoly division on Laurent operand");
    if (a.is_zero()) {
      quot = LPoly();
      return true;
    }
    if (a.degree() < d.degree()) return false;
    LPoly rem(a), q;
    const Int& lead = d.c_.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      Int rc = rem.c_.back();
      if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t())) return false;
      Int qc;
      mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead.get_mpz_t());
      LPoly t = term(qc, rem.degree() - d.degree());
      q += t;
      rem -= t * d;
    }
    if (!rem.is_zero()) return false;
    quot = q;
    return true;
  }

  LPoly divide_exact(const LPoly& d) const {
    LPoly q;
    require_internal(try_divide(*this, d, q), "LPoly division not exact");
    return q;
  }

  bool divisible_by(const LPoly& d) const {
    LPoly q;
    return try_divide(*this, d, q);
  }

  // Evaluate at an integer point (used at prime powers q).  Negative
  // exponents are a domain error: the caller holds a Laurent intermediate.
  Int eval(const Int& x) const {
    require_input(!is_laurent(), "evaluation of Laurent polynomial with negative exponents");
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    if (low_ > 0) acc *= int_pow(x, static_cast<unsigned long>(low_));
    return acc;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (long e = degree(); e >= lowest(); --e) {
      const Int c = coefficient(e);
      if (c == 0) continue;
      bool neg = c < 0;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      Int a = abs(c);
      if (e == 0) {
        out += a.get_str();
      } else {
        if (a != 1) out += a.get_str() + "*";
        out += (e == 1) ? "L" : ("L^" + std::to_string(e));
      }
    }
    return out;
  }

private:
  void normalize() {
    size_t b = 0, e = c_.size();
    while (e > b && c_[e - 1] == 0) --e;
    while (b < e && c_[b] == 0) ++b;
    if (b == e) {
      c_.clear();
      low_ = 0;
      return;
    }
    if (b > 0 || e < c_.size()) {
      std::vector<Int> t(c_.begin() + static_cast<long>(b), c_.begin() + static_cast<long>(e));
      c_ = std::move(t);
      low_ += static_cast<long>(b);
    }
  }

  long low_ = 0;
  std::vector<Int> c_; // c_[i] is the coefficient of L^(low_+i); front/back nonzero
};

// ---------------------------------------------------------------------------
// Display-only factorization: peel powers of L, L+1, L^2+L+1, L-1 and keep
// whatever is left as an opaque residual.  Cosmetic; all comparisons in the
// library are done on expanded polynomials.

struct LFactored {
  unsigned pow_L = 0;
  unsigned pow_L_plus_1 = 0;
  unsigned pow_L2_L_1 = 0; // L^2+L+1
  unsigned pow_L_minus_1 = 0;
  LPoly residual; // zero iff input was zero

  std::string to_string() const {
    if (residual.is_zero()) return "0";
    std::vector<std::string> parts;
    auto push_pow = [&parts](const std::string& base, unsigned p, bool bare) {
      if (p == 0) return;
      std::string s = bare ? base : "(" + base + ")";
      if (p > 1) s += "^" + std::to_string(p);
      parts.push_back(s);
    };
    push_pow("L", pow_L, true);
    bool residual_is_one = residual == LPoly::one();
    bool residual_is_minus_one = residual == LPoly::constant(-1);
    std::string lead;
    if (residual_is_minus_one) lead = "-";
    if (!residual_is_one && !residual_is_minus_one) {
      std::string r = residual.to_string();
      bool atomic = residual.degree() == 0 || (r.find(' ') == std::string::npos && r[0] != '-');
      parts.push_back(atomic ? r : "(" + r + ")");
    }
    push_pow("L+1", pow_L_plus_1, false);
    push_pow("L^2+L+1", pow_L2_L_1, false);
    push_pow("L-1", pow_L_minus_1, false);
    if (parts.empty()) return residual_is_minus_one ? "-1" : "1";
    std::string out = lead;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out += "*";
      out += parts[i];
    }
    return out;
  }
};

inline LFactored display_factor(const LPoly& p) {
  LFactored f;
  f.residual = p;
  if (p.is_zero()) return f;
  require_input(!p.is_laurent(), "display_factor on Laurent polynomial");
  const LPoly L = LPoly::var();
  const LPoly Lp1 = L + LPoly::one();
  const LPoly Lm1 = L - LPoly::one();
  const LPoly L2L1 = L * L + L + LPoly::one();
  auto peel = [&f](const LPoly& atom, unsigned& count) {
    LPoly q;
    while (LPoly::try_divide(f.residual, atom, q)) {
      f.residual = q;
      ++count;
    }
  };
  peel(L, f.pow_L);
  peel(Lp1, f.pow_L_plus_1);
  peel(L2L1, f.pow_L2_L_1);
  peel(Lm1, f.pow_L_minus_1);
  return f;
}

// ---------------------------------------------------------------------------
// Tiny expression parser over Z[L]: integers, L, + - * ^, parentheses.
// Exponents are nonnegative integer literals.

namespace detail {

class LExprParser {
public:
  explicit LExprParser(const std::string& s) : s_(s) {}

  LPoly parse() {
    LPoly r = expr();
    skip_ws();
    require_input(pos_ == s_.size(), "trailing characters in L-expression");
    return r;
  }

private:
  LPoly expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    LPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        LPoly t = term();
        acc = (c == '+') ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

  LPoly term() {
    LPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  LPoly factor() {
    LPoly base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      unsigned e = 0;
      bool any = false;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<unsigned>(peek() - '0');
        ++pos_;
        any = true;
      }
      require_input(any, "missing exponent in L-expression");
      return base.pow(e);
    }
    return base;
  }

  LPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      LPoly r = expr();
      skip_ws();
      require_input(peek() == ')', "unbalanced parenthesis in L-expression");
      ++pos_;
      return r;
    }
    if (c == 'L') {
      ++pos_;
      return LPoly::var();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        num.push_back(peek());
        ++pos_;
      }
      return LPoly::constant(Int(num));
    }
    throw_input(std::string("unexpected character in L-expression: '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  const std::string& s_;
  size_t pos_ = 0;
};

} // namespace detail

inline LPoly parse_lexpr(const std::string& s) { return detail::LExprParser(s).parse(); }

} // namespace psidet
