/*
 * Graph polynomials.  The Kirchhoff polynomial is computed two independent
 * ways: as the spanning-tree sum and as det of the loop matrix M(t) built
 * from a cycle basis; psi_from_det cross-checks the two on every call.
 *
 * The momentum polynomial sums s_C * prod_{e in C} t_e over cut-sets C,
 * where s_C is the squared total momentum entering either side of the cut
 * (Euclidean inner product, exact rationals; both sides must agree).
 */
#pragma once

#include <string>
#include <vector>

#include "psidet/embedding.hpp"
#include "psidet/graph.hpp"
#include "psidet/graphalg.hpp"
#include "psidet/multipoly.hpp"

namespace psidet {

inline MultiPoly psi_from_trees(const FeynmanGraph& g) {
  const auto vars = g.edge_variables();
  MultiPoly acc = MultiPoly::zero(vars);
  for (const auto& tree : spanning_trees(g)) {
    Exponents e(vars.size(), 1);
    for (size_t t : tree) e[t] = 0;
    acc.add_term(e, Int(1));
  }
  return acc;
}

// M(t)[k][r] = sum_e t_e eta[e][k] eta[e][r]; symmetric, loop sums on the
// diagonal with all signs +.
inline PolyMatrix<Int> m_gamma(const FeynmanGraph& g, const LoopBasis& basis) {
  const auto vars = g.edge_variables();
  const size_t ell = basis.loop_count();
  require_input(basis.eta.size() == g.n(), "loop basis does not match graph");
  PolyMatrix<Int> m(ell, std::vector<MultiPoly>(ell, MultiPoly::zero(vars)));
  for (size_t k = 0; k < ell; ++k)
    for (size_t r = 0; r < ell; ++r) {
      Exponents e(vars.size(), 0);
      for (size_t i = 0; i < g.n(); ++i) {
        int c = basis.eta[i][k] * basis.eta[i][r];
        if (c == 0) continue;
        e[i] = 1;
        m[k][r].add_term(e, Int(c));
        e[i] = 0;
      }
    }
  return m;
}

inline MultiPoly psi_from_det(const FeynmanGraph& g, const LoopBasis& basis) {
  MultiPoly det = poly_det(m_gamma(g, basis), g.edge_variables());
  require_internal(det == psi_from_trees(g),
                   "det of the loop matrix disagrees with the spanning-tree sum");
  return det;
}

namespace detail {

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace detail

// Momentum dimension; 0 when no external momenta are given.
inline size_t momentum_dimension(const FeynmanGraph& g) {
  for (const auto& x : g.externals)
    if (!x.momentum.empty()) return x.momentum.size();
  return 0;
}

inline RatPoly p_gamma(const FeynmanGraph& g) {
  const auto vars = g.edge_variables();
  RatPoly acc = RatPoly::zero(vars);
  const size_t D = momentum_dimension(g);
  if (D == 0) return acc;

  std::vector<Rat> total(D, Rat(0));
  for (const auto& x : g.externals)
    for (size_t i = 0; i < x.momentum.size(); ++i) total[i] += x.momentum[i];
  for (const Rat& c : total)
    require_input(c == 0, "external momenta violate the conservation law");

  for (const auto& cut : cut_sets(g)) {
    std::vector<bool> removed(g.n(), false);
    for (size_t e : cut) removed[e] = true;
    detail::DSU dsu(g.num_vertices());
    for (size_t e = 0; e < g.n(); ++e)
      if (!removed[e]) dsu.unite(g.edges[e].src, g.edges[e].dst);
    const size_t side0 = dsu.find(0);
    std::vector<Rat> p0(D, Rat(0)), p1(D, Rat(0));
    for (const auto& x : g.externals) {
      auto& side = (dsu.find(x.at) == side0) ? p0 : p1;
      for (size_t i = 0; i < x.momentum.size(); ++i) side[i] += x.momentum[i];
    }
    Rat s0 = detail::dot(p0, p0), s1 = detail::dot(p1, p1);
    require_internal(s0 == s1, "cut coefficient differs between the two sides");
    if (s0 == 0) continue;
    Exponents e(vars.size(), 0);
    for (size_t t : cut) e[t] = 1;
    acc.add_term(e, s0);
  }
  return acc;
}

} // namespace psidet
