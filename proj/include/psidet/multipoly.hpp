/*
 * Sparse multivariate polynomials over an exact coefficient ring.
 *
 * Representation: ordered map from exponent vector to nonzero coefficient,
 * keyed by graded lexicographic order (total degree first, then lex).  The
 * variable list is explicit and ordered; binary operations require both
 * operands to carry the same list.
 *
 * poly_det uses cofactor expansion for small matrices and fraction-free
 * Bareiss elimination (exact polynomial division) for larger ones.
 */
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "psidet/errors.hpp"
#include "psidet/numeric.hpp"

namespace psidet {

namespace coeff {

inline bool is_zero(const Int& c) { return c == 0; }
inline bool is_zero(const Rat& c) { return c == 0; }
inline bool is_negative(const Int& c) { return c < 0; }
inline bool is_negative(const Rat& c) { return c < 0; }
inline bool is_one_abs(const Int& c) { return c == 1 || c == -1; }
inline bool is_one_abs(const Rat& c) { return c == 1 || c == -1; }

// Division that must be exact over the ring.
inline Int div_exact(const Int& a, const Int& b) {
  require_internal(b != 0, "exact division by zero coefficient");
  require_internal(mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0,
                   "coefficient division not exact");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rat div_exact(const Rat& a, const Rat& b) {
  require_internal(b != 0, "exact division by zero coefficient");
  return a / b;
}

inline std::string abs_str(const Int& c) { return to_string(Int(abs(c))); }
inline std::string abs_str(const Rat& c) { return to_string(Rat(abs(c))); }

} // namespace coeff

using Exponents = std::vector<unsigned>;

struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned long da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

template <class C>
class MultiPolyT {
public:
  using TermMap = std::map<Exponents, C, GradedLexLess>;

  MultiPolyT() = default;
  explicit MultiPolyT(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPolyT zero(const std::vector<std::string>& vars) { return MultiPolyT(vars); }

  static MultiPolyT constant(const std::vector<std::string>& vars, const C& c) {
    MultiPolyT p(vars);
    if (!coeff::is_zero(c)) p.terms_[Exponents(vars.size(), 0)] = c;
    return p;
  }

  static MultiPolyT one(const std::vector<std::string>& vars) { return constant(vars, C(1)); }

  static MultiPolyT variable(const std::vector<std::string>& vars, size_t idx) {
    require_input(idx < vars.size(), "variable index out of range");
    MultiPolyT p(vars);
    Exponents e(vars.size(), 0);
    e[idx] = 1;
    p.terms_[e] = C(1);
    return p;
  }

  static MultiPolyT monomial(const std::vector<std::string>& vars, const Exponents& e, const C& c) {
    require_input(e.size() == vars.size(), "exponent vector length mismatch");
    MultiPolyT p(vars);
    if (!coeff::is_zero(c)) p.terms_[e] = c;
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == C(1) &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](unsigned e) { return e == 0; });
  }

  unsigned long total_degree() const {
    if (terms_.empty()) return 0;
    const Exponents& e = terms_.rbegin()->first;
    unsigned long d = 0;
    for (unsigned x : e) d += x;
    return d;
  }

  void add_term(const Exponents& e, const C& c) {
    require_input(e.size() == vars_.size(), "exponent vector length mismatch");
    if (coeff::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (coeff::is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPolyT& operator+=(const MultiPolyT& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPolyT& operator-=(const MultiPolyT& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }
  friend MultiPolyT operator+(MultiPolyT a, const MultiPolyT& b) { return a += b; }
  friend MultiPolyT operator-(MultiPolyT a, const MultiPolyT& b) { return a -= b; }

  MultiPolyT operator-() const {
    MultiPolyT r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = C(-c);
    return r;
  }

  friend MultiPolyT operator*(const MultiPolyT& a, const MultiPolyT& b) {
    a.check_vars(b);
    MultiPolyT r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, C(ca * cb));
      }
    }
    return r;
  }

  MultiPolyT& operator*=(const MultiPolyT& o) { return *this = *this * o; }

  MultiPolyT scaled(const C& c) const {
    MultiPolyT r(vars_);
    if (coeff::is_zero(c)) return r;
    for (const auto& [e, t] : terms_) r.terms_[e] = C(t * c);
    return r;
  }

  bool operator==(const MultiPolyT& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPolyT& o) const { return !(*this == o); }

  // Replace variable idx by the polynomial q (same variable list).
  MultiPolyT substitute(size_t idx, const MultiPolyT& q) const {
    check_vars(q);
    require_input(idx < vars_.size(), "variable index out of range");
    MultiPolyT r(vars_);
    std::vector<MultiPolyT> powers = {one(vars_)};
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[idx]) powers.push_back(powers.back() * q);
      Exponents rest(e);
      rest[idx] = 0;
      r += powers[e[idx]] * monomial(vars_, rest, c);
    }
    return r;
  }

  // Exact division: *this == result * d must hold, else internal error.
  MultiPolyT divide_exact(const MultiPolyT& d) const {
    check_vars(d);
    require_internal(!d.is_zero(), "polynomial division by zero");
    MultiPolyT rem(*this), q(vars_);
    const auto& [de, dc] = *d.terms_.rbegin();
    while (!rem.is_zero()) {
      const auto& [re, rc] = *rem.terms_.rbegin();
      Exponents qe(re);
      for (size_t i = 0; i < qe.size(); ++i) {
        require_internal(re[i] >= de[i], "polynomial division not exact (monomial)");
        qe[i] = re[i] - de[i];
      }
      C qc = coeff::div_exact(rc, dc);
      MultiPolyT t = monomial(vars_, qe, qc);
      q += t;
      rem -= t * d;
      if (!rem.is_zero()) {
        require_internal(GradedLexLess{}(rem.terms_.rbegin()->first, re),
                         "polynomial division not exact (no progress)");
      }
    }
    return q;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool neg = coeff::is_negative(c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono = monomial_str(e);
      if (mono.empty()) {
        out += coeff::abs_str(c);
      } else {
        if (!coeff::is_one_abs(c)) out += coeff::abs_str(c) + "*";
        out += mono;
      }
    }
    return out;
  }

private:
  void check_vars(const MultiPolyT& o) const {
    require_input(vars_ == o.vars_, "polynomial variable lists differ");
  }

  std::string monomial_str(const Exponents& e) const {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars_[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

using MultiPoly = MultiPolyT<Int>;
using RatPoly = MultiPolyT<Rat>;

template <class C>
using PolyMatrix = std::vector<std::vector<MultiPolyT<C>>>;

namespace detail {

template <class C>
MultiPolyT<C> det_cofactor(const PolyMatrix<C>& m, const std::vector<std::string>& vars) {
  const size_t n = m.size();
  if (n == 0) return MultiPolyT<C>::one(vars);
  if (n == 1) return m[0][0];
  MultiPolyT<C> acc(vars);
  for (size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    PolyMatrix<C> sub;
    sub.reserve(n - 1);
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      sub.emplace_back(m[r].begin() + 1, m[r].end());
    }
    MultiPolyT<C> term = m[i][0] * det_cofactor(sub, vars);
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

template <class C>
MultiPolyT<C> det_bareiss(PolyMatrix<C> m, const std::vector<std::string>& vars) {
  const size_t n = m.size();
  if (n == 0) return MultiPolyT<C>::one(vars);
  int sign = 1;
  MultiPolyT<C> prev = MultiPolyT<C>::one(vars);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MultiPolyT<C>::zero(vars);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPolyT<C> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.divide_exact(prev);
      }
      m[i][k] = MultiPolyT<C>::zero(vars);
    }
    prev = m[k][k];
  }
  return sign == 1 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace detail

// Determinant of a square polynomial matrix.  Empty matrix has determinant 1.
template <class C>
MultiPolyT<C> poly_det(const PolyMatrix<C>& m, const std::vector<std::string>& vars) {
  const size_t n = m.size();
  for (const auto& row : m) {
    require_input(row.size() == n, "poly_det: matrix not square");
    for (const auto& p : row)
      require_input(p.vars() == vars, "poly_det: entry variable list mismatch");
  }
  if (n <= 6) return detail::det_cofactor(m, vars);
  return detail::det_bareiss(m, vars);
}

} // namespace psidet
