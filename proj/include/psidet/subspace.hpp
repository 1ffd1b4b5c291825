/*
 * Configurations of up to three linear subspaces of Q^ell, with exactly
 * computed intersection and span dimensions.  Subspaces are stored as basis
 * rows; intersections go through the double-annihilator (normals of a span
 * are its nullspace, and vice versa).
 *
 * config_from_selection turns a selection of divisor components into the
 * row-wise configuration it cuts out: an off-diagonal component x_ij puts
 * the hyperplane {x_j = 0} on row i, a row-sum component puts the
 * hyperplane {x_1 + ... + x_{f-1} = 0} on its row, and rows touched by no
 * selected component stay the full space.
 */
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "psidet/errors.hpp"
#include "psidet/matrix.hpp"
#include "psidet/numeric.hpp"
#include "psidet/tau.hpp"

namespace psidet {

inline RatMatrix full_space(size_t ell) {
  RatMatrix m(ell, ell);
  for (size_t i = 0; i < ell; ++i) m.at(i, i) = Rat(1);
  return m;
}

inline size_t space_dim(const RatMatrix& basis) { return basis.rank(); }

inline RatMatrix space_intersection(const RatMatrix& a, const RatMatrix& b) {
  require_input(a.cols() == b.cols(), "subspaces live in different ambient spaces");
  return a.nullspace().stacked(b.nullspace()).nullspace();
}

// Three subspaces of Q^ambient with every intersection dimension cached.
// Shorter space lists are padded with copies of the full space, so the
// cached numbers are always meaningful.
struct SubspaceConfig {
  size_t ambient = 0;
  std::vector<RatMatrix> spaces; // exactly three, basis rows each
  size_t d1 = 0, d2 = 0, d3 = 0;
  size_t d12 = 0, d13 = 0, d23 = 0, d123 = 0;
  size_t D = 0; // dim(V1 + V2 + V3)
};

inline SubspaceConfig make_config(size_t ambient, std::vector<RatMatrix> spaces) {
  require_input(ambient >= 1, "ambient dimension must be positive");
  require_input(spaces.size() <= 3, "at most three subspaces are supported");
  while (spaces.size() < 3) spaces.push_back(full_space(ambient));
  for (const RatMatrix& s : spaces)
    require_input(s.cols() == ambient, "subspace basis width differs from the ambient dimension");

  SubspaceConfig c;
  c.ambient = ambient;
  c.spaces = std::move(spaces);
  c.d1 = space_dim(c.spaces[0]);
  c.d2 = space_dim(c.spaces[1]);
  c.d3 = space_dim(c.spaces[2]);
  RatMatrix v12 = space_intersection(c.spaces[0], c.spaces[1]);
  c.d12 = space_dim(v12);
  c.d13 = space_dim(space_intersection(c.spaces[0], c.spaces[2]));
  c.d23 = space_dim(space_intersection(c.spaces[1], c.spaces[2]));
  c.d123 = space_dim(space_intersection(v12, c.spaces[2]));
  c.D = c.spaces[0].stacked(c.spaces[1]).stacked(c.spaces[2]).rank();

  require_internal(c.d12 <= std::min(c.d1, c.d2) && c.d13 <= std::min(c.d1, c.d3) &&
                       c.d23 <= std::min(c.d2, c.d3),
                   "pairwise intersection dimension exceeds a subspace dimension");
  require_internal(c.d123 <= std::min({c.d12, c.d13, c.d23}),
                   "triple intersection dimension exceeds a pairwise one");
  require_internal(std::max({c.d1, c.d2, c.d3}) <= c.D && c.D <= ambient,
                   "span dimension out of range");
  return c;
}

inline SubspaceConfig config_from_selection(const DivisorSelection& sel) {
  const size_t ell = sel.loops;
  const std::vector<DivisorComponent> comps = sigma_lg(sel.loops, sel.genus);
  std::vector<std::vector<std::vector<Rat>>> normals(3);
  for (size_t idx : sel.indices) {
    require_input(idx < comps.size(), "selection index out of range");
    const DivisorComponent& comp = comps[idx];
    require_input(comp.i < 3, "selection constrains a row beyond the third");
    std::vector<Rat> normal(ell, Rat(0));
    for (size_t k = 0; k < ell; ++k) normal[k] = Rat(comp.form[comp.i * ell + k]);
    normals[comp.i].push_back(std::move(normal));
  }
  std::vector<RatMatrix> spaces;
  for (size_t i = 0; i < 3; ++i) {
    if (normals[i].empty())
      spaces.push_back(full_space(ell));
    else
      spaces.push_back(RatMatrix::from_rows(normals[i]).nullspace());
  }
  return make_config(ell, std::move(spaces));
}

} // namespace psidet
