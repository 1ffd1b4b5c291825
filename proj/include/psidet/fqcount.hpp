/*
 * Brute-force point counting over prime fields: the ground truth that the
 * symbolic classes are checked against.  Deliberately independent of the
 * class-formula code; the only symbolic type appearing here is LPoly, and
 * only inside verify_class where a candidate polynomial is evaluated at
 * primes and compared with counts.
 *
 * Tuples are enumerated in basis coordinates of each subspace (q^{d_i}
 * points, not ambient points), with the running span of the chosen vectors
 * pruning every dependent prefix.  The final vector is not enumerated at
 * all: its contribution is q^{d_r} - q^{dim(V_r cap span)}.  Counting
 * partitions by the first vector's coordinate range, so it can run on
 * several threads with a deterministic total.
 *
 * Every entry point takes a candidate-tuple budget (default one billion,
 * overridable via PSIDET_ENUM_BUDGET) and refuses with a resource error
 * carrying the required estimate rather than truncating a count.
 */
#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "psidet/errors.hpp"
#include "psidet/fqmat.hpp"
#include "psidet/lpoly.hpp"
#include "psidet/subspace.hpp"

namespace psidet {

inline unsigned long long default_enum_budget() {
  if (const char* s = std::getenv("PSIDET_ENUM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    require_input(end != s && *end == '\0' && v > 0,
                  "PSIDET_ENUM_BUDGET must be a positive integer");
    return v;
  }
  return 1000000000ULL;
}

namespace detail {

constexpr unsigned long long kSatMax = ~0ULL;

inline unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSatMax / b) return kSatMax;
  return a * b;
}

inline unsigned long long sat_pow(unsigned long long base, size_t e) {
  unsigned long long r = 1;
  while (e--) r = sat_mul(r, base);
  return r;
}

// Reduce a subspace basis modulo q and select an independent subset.  The
// subset must reach the rational rank, otherwise point counts at this
// prime do not reflect the configuration and the request is rejected.
inline std::vector<std::vector<uint32_t>> fq_basis(const RatMatrix& space, uint32_t q) {
  const size_t ell = space.cols();
  std::vector<std::vector<uint32_t>> chosen;
  FqSpan span(ell, q);
  for (size_t r = 0; r < space.rows(); ++r) {
    std::vector<Int> w = primitive_int_row(space.row(r));
    std::vector<uint32_t> m(ell);
    for (size_t c = 0; c < ell; ++c)
      m[c] = static_cast<uint32_t>(mpz_fdiv_ui(w[c].get_mpz_t(), q));
    if (span.insert(m)) chosen.push_back(std::move(m));
  }
  require_input(chosen.size() == space.rank(),
                "subspace basis loses rank modulo " + std::to_string(q) +
                    "; counts at this prime do not match the configuration");
  return chosen;
}

// Shared enumeration core.  bases[i] holds the F_q basis rows of V_i.
struct FqEnum {
  const std::vector<std::vector<std::vector<uint32_t>>>& bases;
  size_t dim;
  uint32_t q;

  unsigned long long pow_q(size_t e) const { return sat_pow(q, e); }

  // Levels other than the first; the last level is closed arithmetically.
  unsigned long long count_from(FqSpan& span, size_t level) const {
    const std::vector<std::vector<uint32_t>>& basis = bases[level];
    const size_t d = basis.size();
    if (level + 1 == bases.size()) {
      FqSpan probe = span;
      size_t grow = 0;
      for (const std::vector<uint32_t>& b : basis)
        if (probe.insert(b)) ++grow;
      return pow_q(d) - pow_q(d - grow);
    }
    unsigned long long total = 0;
    std::vector<uint32_t> coord(d, 0), v(dim, 0);
    const unsigned long long states = pow_q(d);
    for (unsigned long long i = 0; i < states; ++i) {
      if (i != 0) step(basis, coord, v);
      if (span.insert(v)) {
        total += count_from(span, level + 1);
        span.remove_last();
      }
    }
    return total;
  }

  // First level over a flat coordinate-index range [lo, hi).
  unsigned long long count_range(unsigned long long lo, unsigned long long hi) const {
    const std::vector<std::vector<uint32_t>>& basis = bases[0];
    const size_t d = basis.size();
    std::vector<uint32_t> coord(d, 0);
    std::vector<uint32_t> v(dim, 0);
    unsigned long long ix = lo;
    for (size_t p = 0; p < d; ++p) {
      coord[p] = static_cast<uint32_t>(ix % q);
      ix /= q;
      if (coord[p])
        for (size_t c = 0; c < dim; ++c)
          v[c] = static_cast<uint32_t>((v[c] + uint64_t(coord[p]) * basis[p][c]) % q);
    }
    unsigned long long total = 0;
    FqSpan span(dim, q);
    for (unsigned long long i = lo; i < hi; ++i) {
      if (i != lo) step(basis, coord, v);
      if (span.insert(v)) {
        total += count_from(span, 1);
        span.remove_last();
      }
    }
    return total;
  }

  // Odometer step: each digit that changes moves by +1 mod q, so the point
  // moves by +basis row regardless of carries.
  void step(const std::vector<std::vector<uint32_t>>& basis, std::vector<uint32_t>& coord,
            std::vector<uint32_t>& v) const {
    size_t p = 0;
    while (true) {
      for (size_t c = 0; c < dim; ++c) {
        v[c] += basis[p][c];
        if (v[c] >= q) v[c] -= q;
      }
      if (++coord[p] == q) {
        coord[p] = 0;
        ++p;
      } else {
        break;
      }
    }
  }
};

inline unsigned long long count_independent_tuples(
    const std::vector<std::vector<std::vector<uint32_t>>>& bases, size_t dim, uint32_t q,
    unsigned long long budget, size_t threads) {
  size_t total_dim = 0;
  for (const auto& b : bases) total_dim += b.size();
  const unsigned long long estimate = sat_pow(q, total_dim);
  if (estimate > budget)
    throw_resource("enumeration needs about " + std::to_string(estimate) +
                   " candidate tuples, budget is " + std::to_string(budget) +
                   " (raise PSIDET_ENUM_BUDGET or pass a larger budget)");
  if (bases.empty()) return 1;

  FqEnum env{bases, dim, q};
  if (bases.size() == 1) {
    FqSpan span(dim, q);
    return env.count_from(span, 0);
  }
  const unsigned long long first = sat_pow(q, bases[0].size());
  size_t workers = threads;
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (estimate < (1ULL << 17)) workers = 1; // not worth spawning for small sweeps
  }
  if (workers > first) workers = static_cast<size_t>(first);
  if (workers <= 1) return env.count_range(0, first);

  std::vector<unsigned long long> partial(workers, 0);
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    const unsigned long long lo = first * w / workers;
    const unsigned long long hi = first * (w + 1) / workers;
    pool.emplace_back([&env, &partial, w, lo, hi] { partial[w] = env.count_range(lo, hi); });
  }
  unsigned long long total = 0;
  for (size_t w = 0; w < workers; ++w) {
    pool[w].join();
    total += partial[w];
  }
  return total;
}

} // namespace detail

// Number of triples (v1, v2, v3), v_i an F_q point of V_i, that are
// linearly independent over F_q.
inline unsigned long long count_frames(const SubspaceConfig& cfg, uint32_t q,
                                       unsigned long long budget = 0, size_t threads = 0) {
  require_prime_field(q);
  std::vector<std::vector<std::vector<uint32_t>>> bases;
  for (const RatMatrix& s : cfg.spaces) bases.push_back(detail::fq_basis(s, q));
  return detail::count_independent_tuples(bases, cfg.ambient, q,
                                          budget ? budget : default_enum_budget(), threads);
}

// Same count for any number of spaces, not just the three-space layout.
inline unsigned long long count_frames(const std::vector<RatMatrix>& spaces, size_t ambient,
                                       uint32_t q, unsigned long long budget = 0,
                                       size_t threads = 0) {
  require_prime_field(q);
  require_input(ambient >= 1, "ambient dimension must be at least 1");
  std::vector<std::vector<std::vector<uint32_t>>> bases;
  for (const RatMatrix& s : spaces) {
    require_input(s.cols() == ambient, "subspace width differs from the ambient dimension");
    bases.push_back(detail::fq_basis(s, q));
  }
  return detail::count_independent_tuples(bases, ambient, q,
                                          budget ? budget : default_enum_budget(), threads);
}

// Number of ell x ell matrices over F_q with independent rows, counted by
// enumeration with rank pruning (no formulas anywhere on this path).
inline unsigned long long count_det_complement(size_t ell, uint32_t q,
                                               unsigned long long budget = 0,
                                               size_t threads = 0) {
  require_input(ell >= 1, "matrix size must be at least 1");
  require_prime_field(q);
  std::vector<std::vector<uint32_t>> identity(ell, std::vector<uint32_t>(ell, 0));
  for (size_t i = 0; i < ell; ++i) identity[i][i] = 1;
  std::vector<std::vector<std::vector<uint32_t>>> bases(ell, identity);
  return detail::count_independent_tuples(bases, ell, q,
                                          budget ? budget : default_enum_budget(), threads);
}

// Counts of full-rank 3x3 matrices over F_q by which divisor components
// they lie on: bucket I holds the matrices vanishing on exactly the
// components in I (bit i = canonical component i).
inline std::array<unsigned long long, 64> count_strata(uint32_t q,
                                                       unsigned long long budget = 0) {
  require_prime_field(q);
  const unsigned long long effective = budget ? budget : default_enum_budget();
  const unsigned long long estimate = detail::sat_pow(q, 9);
  if (estimate > effective)
    throw_resource("enumeration needs about " + std::to_string(estimate) +
                   " candidate tuples, budget is " + std::to_string(effective) +
                   " (raise PSIDET_ENUM_BUDGET or pass a larger budget)");

  const std::vector<DivisorComponent> comps = sigma_lg(3, 0);
  std::array<unsigned long long, 64> buckets{};
  std::array<std::vector<uint32_t>, 3> rows;
  FqSpan span(3, q);

  auto pattern = [&]() {
    unsigned bits = 0;
    for (size_t k = 0; k < comps.size(); ++k) {
      uint64_t acc = 0;
      for (size_t e = 0; e < 9; ++e) {
        const Int& c = comps[k].form[e];
        if (c != 0)
          acc += static_cast<uint64_t>(mpz_fdiv_ui(c.get_mpz_t(), q)) * rows[e / 3][e % 3];
      }
      if (acc % q == 0) bits |= 1u << k;
    }
    return bits;
  };

  auto recurse = [&](auto&& self, size_t level) -> void {
    std::vector<uint32_t> v(3, 0);
    const unsigned long long states = detail::sat_pow(q, 3);
    for (unsigned long long i = 0; i < states; ++i) {
      if (i != 0) {
        size_t p = 0;
        while (true) {
          v[p] = (v[p] + 1) % q;
          if (v[p] == 0 && p + 1 < 3)
            ++p;
          else
            break;
        }
      }
      if (!span.insert(v)) continue;
      rows[level] = v;
      if (level == 2)
        ++buckets[pattern()];
      else
        self(self, level + 1);
      span.remove_last();
    }
  };
  recurse(recurse, 0);
  return buckets;
}

inline unsigned long long count_stratum(unsigned included, uint32_t q,
                                        unsigned long long budget = 0) {
  require_input(included < 64, "stratum mask has six component bits");
  return count_strata(q, budget)[included];
}

// ---------------------------------------------------------------------------
// verification requests

enum class CountKind { det_complement, frame_locus, ie_stratum };

struct CountRequest {
  CountKind kind = CountKind::det_complement;
  size_t ell = 3;
  uint32_t q = 2;
  std::optional<DivisorSelection> selection; // frame_locus from a selection
  std::optional<SubspaceConfig> config;      // or from an explicit config
  unsigned stratum = 0;                      // ie_stratum: included components
  unsigned long long budget = 0;             // 0 = default
  size_t threads = 0;                        // 0 = auto
};

inline unsigned long long run_count(const CountRequest& r) {
  switch (r.kind) {
    case CountKind::det_complement:
      return count_det_complement(r.ell, r.q, r.budget, r.threads);
    case CountKind::frame_locus: {
      if (r.config) return count_frames(*r.config, r.q, r.budget, r.threads);
      require_input(r.selection.has_value(),
                    "frame count needs a selection or an explicit configuration");
      return count_frames(config_from_selection(*r.selection), r.q, r.budget, r.threads);
    }
    case CountKind::ie_stratum:
      require_input(r.ell == 3, "stratum counts exist only for the three-loop layout");
      return count_stratum(r.stratum, r.q, r.budget);
  }
  throw_internal("unhandled count kind");
}

struct PrimeCheck {
  uint32_t q = 0;
  Int expected;
  unsigned long long actual = 0;
  bool counted = false;
  bool match = false;
  std::string note; // resource refusals end up here instead of aborting
};

struct VerifyReport {
  std::vector<PrimeCheck> primes;
  bool all_match = false;
};

// Evaluate a candidate class polynomial at each prime and compare with the
// brute-force count.  A resource refusal at one prime is recorded and the
// remaining primes still run.
inline VerifyReport verify_class(const LPoly& p, const CountRequest& request,
                                 const std::vector<uint32_t>& primes) {
  VerifyReport rep;
  rep.all_match = true;
  for (uint32_t q : primes) {
    PrimeCheck check;
    check.q = q;
    check.expected = p.eval(Int(q));
    try {
      CountRequest r = request;
      r.q = q;
      check.actual = run_count(r);
      check.counted = true;
      check.match = (check.expected == Int(static_cast<unsigned long>(check.actual)));
    } catch (const error& e) {
      if (e.kind() != errkind::resource) throw;
      check.note = e.what();
    }
    rep.all_match = rep.all_match && check.match;
    rep.primes.push_back(std::move(check));
  }
  return rep;
}

} // namespace psidet
