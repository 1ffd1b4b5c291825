/*
 * Classes in the Grothendieck ring of varieties, as polynomials in the
 * Lefschetz symbol L.
 *
 * det_complement_class / det_hypersurface_class: the locus of invertible
 * ell x ell matrices and its complement, affine or projectivized.
 *
 * frame_class_r2 / frame_class_r3: the class of frames (v1, .., vr)
 * linearly independent with v_i in V_i.  The three-space class is computed
 * by stratifying V3 \ {0} by the position of v3 relative to V1, V2 and
 * summing L^s * [pair frame class after projection] * [stratum] over the
 * five strata; zero strata are skipped before the projected dimensions are
 * formed.  The result is always divisible by (L-1)^3.
 *
 * frame_class_r3_closed is a closed-form alternative kept for reporting
 * only: it disagrees with the stratified computation (and with brute-force
 * counts over finite fields) on recorded fixtures, so nothing downstream
 * consumes it.
 *
 * inclusion_exclusion_strata splits the full three-loop complement into the
 * 64 locally closed pieces indexed by which divisor components a matrix
 * row-space configuration meets; sigma_complement_class sums the pieces
 * meeting a chosen component selection.
 */
#pragma once

#include <array>
#include <bit>
#include <string>
#include <vector>

#include "psidet/errors.hpp"
#include "psidet/lpoly.hpp"
#include "psidet/subspace.hpp"

namespace psidet {

inline LPoly det_complement_class(size_t ell, bool projective) {
  require_input(ell >= 1, "matrix size must be at least 1");
  LPoly out = LPoly::term(Int(1), static_cast<long>(ell * (ell - 1) / 2));
  for (size_t i = projective ? 2 : 1; i <= ell; ++i)
    out *= LPoly::term(Int(1), static_cast<long>(i)) - LPoly::one();
  return out;
}

inline LPoly det_hypersurface_class(size_t ell, bool projective) {
  LPoly ambient;
  if (projective) {
    for (size_t k = 0; k < ell * ell; ++k) ambient += LPoly::term(Int(1), static_cast<long>(k));
  } else {
    ambient = LPoly::term(Int(1), static_cast<long>(ell * ell));
  }
  return ambient - det_complement_class(ell, projective);
}

namespace detail {

// L^{d1+d2} - L^{d1} - L^{d2} - L^{d12+1} + L^{d12} + L, no validation.
inline LPoly frame_pair_core(long d1, long d2, long d12) {
  LPoly out = LPoly::term(Int(1), d1 + d2);
  out -= LPoly::term(Int(1), d1);
  out -= LPoly::term(Int(1), d2);
  out -= LPoly::term(Int(1), d12 + 1);
  out += LPoly::term(Int(1), d12);
  out += LPoly::var();
  return out;
}

} // namespace detail

inline LPoly frame_class_r2(size_t d1, size_t d2, size_t d12) {
  require_input(d12 <= std::min(d1, d2),
                "intersection dimension exceeds one of the subspace dimensions");
  LPoly out = detail::frame_pair_core(static_cast<long>(d1), static_cast<long>(d2),
                                      static_cast<long>(d12));
  require_internal(out.divisible_by((LPoly::var() - LPoly::one()).pow(2)),
                   "pair frame class is not divisible by (L-1)^2");
  return out;
}

inline LPoly frame_class_r3(const SubspaceConfig& cfg) {
  const long d1 = static_cast<long>(cfg.d1);
  const long d2 = static_cast<long>(cfg.d2);
  const long d3 = static_cast<long>(cfg.d3);
  const long d12 = static_cast<long>(cfg.d12);
  const long d13 = static_cast<long>(cfg.d13);
  const long d23 = static_cast<long>(cfg.d23);
  const long d123 = static_cast<long>(cfg.d123);
  const long m = d1 + d2 + d3 - static_cast<long>(cfg.D) - d12; // dim(V3 cap (V1+V2))
  require_internal(m >= 0 && m <= d3, "cached dimensions are inconsistent");

  auto pw = [](long e) {
    require_internal(e >= 0, "negative exponent from cached dimensions");
    return LPoly::term(Int(1), e);
  };

  // Strata of V3 \ {0}: v3 in all three spaces; in V1 or V2 only; in V1+V2
  // but neither; outside V1+V2.  Each row: class of the stratum, the power
  // of L it contributes, and the pair dimensions after projecting from v3.
  struct Stratum {
    LPoly cls;
    unsigned s;
    long p1, p2, p12;
  };
  const std::array<Stratum, 5> strata = {{
      {pw(d123) - LPoly::one(), 2, d1 - 1, d2 - 1, d12 - 1},
      {pw(d13) - pw(d123), 1, d1 - 1, d2, d12},
      {pw(d23) - pw(d123), 1, d1, d2 - 1, d12},
      {pw(m) - pw(d13) - pw(d23) + pw(d123), 0, d1, d2, d12 + 1},
      {pw(d3) - pw(m), 0, d1, d2, d12},
  }};

  LPoly total;
  for (const Stratum& st : strata) {
    if (st.cls.is_zero()) continue;
    require_internal(st.p1 >= 0 && st.p2 >= 0 && st.p12 >= 0 &&
                         st.p12 <= std::min(st.p1, st.p2),
                     "projected pair dimensions are inconsistent");
    total += LPoly::term(Int(1), st.s) * detail::frame_pair_core(st.p1, st.p2, st.p12) * st.cls;
  }
  require_internal(total.divisible_by((LPoly::var() - LPoly::one()).pow(3)),
                   "frame class is not divisible by (L-1)^3");
  return total;
}

// Closed form for the three-space frame class.  Reporting only: disagrees
// with frame_class_r3 and with finite-field counts on recorded fixtures.
inline LPoly frame_class_r3_closed(size_t d1, size_t d2, size_t d3, size_t d12, size_t d13,
                                   size_t d23, size_t d123, size_t D) {
  require_input(D <= d1 + d2 + d3, "span dimension exceeds the sum of subspace dimensions");
  auto pw = [](size_t e) { return LPoly::term(Int(1), static_cast<long>(e)); };
  const LPoly L = LPoly::var();
  const LPoly one = LPoly::one();
  const LPoly lm1 = L - one;
  LPoly out = (pw(d1) - one) * (pw(d2) - one) * (pw(d3) - one);
  out -= lm1 * ((pw(d1) - L) * (pw(d23) - one) + (pw(d2) - L) * (pw(d13) - one) +
                (pw(d3) - L) * (pw(d12) - one));
  out += lm1.pow(2) * (pw(d1 + d2 + d3 - D) - pw(d123 + 1));
  out += lm1.pow(3);
  return out;
}

inline LPoly frame_class_r3_closed(const SubspaceConfig& cfg) {
  return frame_class_r3_closed(cfg.d1, cfg.d2, cfg.d3, cfg.d12, cfg.d13, cfg.d23, cfg.d123,
                               cfg.D);
}

// Frames in a nested chain V_1 subset ... subset V_r of the given
// dimensions: prod_k (L^{d_k} - L^{k-1}).
inline LPoly frame_class_chain(const std::vector<size_t>& dims) {
  LPoly out = LPoly::one();
  for (size_t k = 0; k < dims.size(); ++k) {
    if (k > 0)
      require_input(dims[k] >= dims[k - 1], "chain dimensions must be nondecreasing");
    out *= LPoly::term(Int(1), static_cast<long>(dims[k])) -
           LPoly::term(Int(1), static_cast<long>(k));
  }
  return out;
}

// Classes of the 64 strata of the three-loop complement, indexed by the
// bitmask of divisor components met (bit i = canonical component i).  Entry
// I is the alternating superset sum over frame classes, and the 64 entries
// partition the full affine complement class.
inline std::array<LPoly, 64> inclusion_exclusion_strata() {
  std::array<LPoly, 64> frames;
  for (unsigned m = 0; m < 64; ++m) {
    std::string mask(6, '0');
    for (unsigned i = 0; i < 6; ++i)
      if (m & (1u << i)) mask[i] = '1';
    frames[m] = frame_class_r3(config_from_selection(selection_from_mask(3, 0, mask)));
  }
  std::array<LPoly, 64> strata;
  LPoly total;
  for (unsigned i = 0; i < 64; ++i) {
    const unsigned free = ~i & 63u;
    LPoly acc;
    unsigned k = free;
    while (true) {
      if (std::popcount(k) % 2 == 0)
        acc += frames[i | k];
      else
        acc -= frames[i | k];
      if (k == 0) break;
      k = (k - 1) & free;
    }
    strata[i] = acc;
    total += strata[i];
  }
  require_internal(total == det_complement_class(3, false),
                   "stratum classes do not sum to the full complement class");
  return strata;
}

// Class of the part of the three-loop complement lying over the union of
// the selected divisor components: the sum of all strata meeting the
// selection.
inline LPoly sigma_complement_class(const DivisorSelection& sel) {
  require_input(sel.loops == 3 && sel.genus == 0,
                "supported only for three loops at genus zero");
  const std::array<LPoly, 64> strata = inclusion_exclusion_strata();
  unsigned chosen = 0;
  for (size_t i : sel.indices) chosen |= 1u << i;
  LPoly out;
  for (unsigned i = 1; i < 64; ++i)
    if (i & chosen) out += strata[i];
  return out;
}

} // namespace psidet
