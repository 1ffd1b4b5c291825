/*
 * Dense exact-rational matrices: rank, reduced row echelon form, nullspace,
 * and helpers to move between rational and primitive integer row bases.
 */
#pragma once

#include <vector>

#include "psidet/errors.hpp"
#include "psidet/numeric.hpp"

namespace psidet {

class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, Rat(0))) {}

  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
    RatMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
      require_input(r.size() == m.cols_, "ragged matrix rows");
    m.a_ = rows;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& at(size_t r, size_t c) { return a_[r][c]; }
  const Rat& at(size_t r, size_t c) const { return a_[r][c]; }
  const std::vector<Rat>& row(size_t r) const { return a_[r]; }

  void append_row(const std::vector<Rat>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    require_input(r.size() == cols_, "row length mismatch");
    a_.push_back(r);
    ++rows_;
  }

  RatMatrix stacked(const RatMatrix& o) const {
    require_input(cols_ == o.cols_ || o.rows_ == 0 || rows_ == 0, "column count mismatch in stack");
    RatMatrix m(*this);
    for (size_t r = 0; r < o.rows_; ++r) m.append_row(o.a_[r]);
    if (m.rows_ > 0 && m.cols_ == 0) m.cols_ = o.cols_;
    return m;
  }

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t r = 0; r < rows_ && lead < cols_; ++r) {
      size_t i = r;
      while (i < rows_ && a_[i][lead] == 0) {
        ++i;
        if (i == rows_) {
          i = r;
          ++lead;
          if (lead == cols_) return pivots;
        }
      }
      std::swap(a_[i], a_[r]);
      Rat p = a_[r][lead];
      for (size_t c = lead; c < cols_; ++c) a_[r][c] /= p;
      for (size_t j = 0; j < rows_; ++j) {
        if (j == r || a_[j][lead] == 0) continue;
        Rat f = a_[j][lead];
        for (size_t c = lead; c < cols_; ++c) a_[j][c] -= f * a_[r][c];
      }
      pivots.push_back(lead);
      ++lead;
    }
    return pivots;
  }

  size_t rank() const {
    RatMatrix m(*this);
    return m.rref().size();
  }

  // Basis (as rows) of {x : M x = 0}.
  RatMatrix nullspace() const {
    RatMatrix m(*this);
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    RatMatrix basis(0, cols_);
    for (size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rat> v(cols_, Rat(0));
      v[free] = 1;
      for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.a_[k][free];
      basis.append_row(v);
    }
    return basis;
  }

  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Rat>> a_;
};

// Clear denominators and content: the smallest integer vector on the same
// line with positive leading sign.
inline std::vector<Int> primitive_int_row(const std::vector<Rat>& row) {
  Int lcm(1);
  for (const Rat& x : row) {
    Rat c(x);
    c.canonicalize();
    Int den = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<Int> out;
  out.reserve(row.size());
  Int content(0);
  for (const Rat& x : row) {
    Rat v = x * Rat(lcm);
    v.canonicalize();
    require_internal(v.get_den() == 1, "primitive_int_row: clearing denominators failed");
    out.push_back(v.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content > 1)
    for (Int& x : out) x /= content;
  for (const Int& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : out) y = -y;
    break;
  }
  return out;
}

} // namespace psidet
