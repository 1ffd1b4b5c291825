/*
 * Arithmetic over prime fields F_q with small q: primality guard, modular
 * inverse, and an incremental row-reducer used by the brute-force counting
 * routines (add vectors one at a time, learn whether each enlarges the span).
 */
#pragma once

#include <cstdint>
#include <vector>

#include "psidet/errors.hpp"

namespace psidet {

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime_field(uint32_t q) {
  require_input(is_prime_u32(q), "F_q requires q prime (got q=" + std::to_string(q) + ")");
}

inline uint32_t fq_inv(uint32_t a, uint32_t q) {
  // q is tiny; extended Euclid without fuss
  int64_t t = 0, newt = 1, r = q, newr = a % q;
  while (newr != 0) {
    int64_t quo = r / newr;
    t -= quo * newt;
    std::swap(t, newt);
    r -= quo * newr;
    std::swap(r, newr);
  }
  require_internal(r == 1, "fq_inv of non-unit");
  return static_cast<uint32_t>((t % q + q) % q);
}

// Maintains a row-echelon basis of the span of inserted vectors.
class FqSpan {
public:
  FqSpan(size_t dim, uint32_t q) : dim_(dim), q_(q) {}

  size_t rank() const { return rows_.size(); }

  // Returns true (and absorbs the vector) if v was independent of the span.
  bool insert(std::vector<uint32_t> v) {
    reduce(v);
    size_t lead = leading(v);
    if (lead == dim_) return false;
    uint32_t inv = fq_inv(v[lead], q_);
    for (size_t c = lead; c < dim_; ++c) v[c] = static_cast<uint32_t>((uint64_t(v[c]) * inv) % q_);
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  bool contains(std::vector<uint32_t> v) const {
    reduce(v);
    return leading(v) == dim_;
  }

  // Undo the most recent successful insert (insert never rewrites earlier
  // rows, so dropping the last one restores the exact previous state).
  void remove_last() {
    require_internal(!rows_.empty(), "FqSpan::remove_last on empty span");
    rows_.pop_back();
    leads_.pop_back();
  }

private:
  void reduce(std::vector<uint32_t>& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      uint32_t f = v[leads_[k]];
      if (f == 0) continue;
      const std::vector<uint32_t>& r = rows_[k];
      for (size_t c = leads_[k]; c < dim_; ++c)
        v[c] = static_cast<uint32_t>((uint64_t(v[c]) + uint64_t(q_ - f) * r[c]) % q_);
    }
  }

  size_t leading(const std::vector<uint32_t>& v) const {
    for (size_t c = 0; c < dim_; ++c)
      if (v[c] != 0) return c;
    return dim_;
  }

  size_t dim_;
  uint32_t q_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<size_t> leads_;
};

inline size_t fq_rank(const std::vector<std::vector<uint32_t>>& rows, size_t dim, uint32_t q) {
  FqSpan s(dim, q);
  for (const auto& r : rows) {
    require_input(r.size() == dim, "fq_rank: ragged rows");
    s.insert(r);
  }
  return s.rank();
}

} // namespace psidet
