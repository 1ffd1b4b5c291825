/*
 * The linear map tau sending edge variables to the entries of the loop
 * matrix: column e of the ell^2 x n matrix is dM/dt_e flattened row-major.
 * Injectivity is decided by exact rank; two combinatorial certificates are
 * implemented on top of face data:
 *
 *   - loop-isolation: within each basis loop, an edge is isolated when some
 *     other loop meets that loop in exactly this edge (so an off-diagonal
 *     entry equals +-t_e).  A loop with at most one non-isolated edge
 *     recovers that edge from its diagonal sum.  If certified loops cover
 *     every edge, tau is injective.
 *   - closed-2cell-face-pairs: >= 3 vertices, no looping edges, closed
 *     2-cell embedding, and pairwise faces sharing at most one edge.
 *
 * Looping edges are stripped before certification (injectivity is invariant
 * under adding them; their monogon columns are block-trivial).
 *
 * The divisor components on the matrix space and their pullbacks along tau
 * (selecting those that land on single edge variables) live here too.
 */
#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "psidet/embedding.hpp"
#include "psidet/graph.hpp"
#include "psidet/graphalg.hpp"
#include "psidet/matrix.hpp"

namespace psidet {

struct TauMap {
  RatMatrix matrix; // ell^2 rows, n columns
  size_t loops = 0;
  size_t n = 0;
};

inline TauMap tau_matrix(const FeynmanGraph& g, const LoopBasis& basis) {
  require_input(basis.eta.size() == g.n(), "loop basis does not match graph");
  const size_t ell = basis.loop_count(), n = g.n();
  TauMap tm{RatMatrix(ell * ell, n), ell, n};
  for (size_t e = 0; e < n; ++e)
    for (size_t i = 0; i < ell; ++i)
      for (size_t j = 0; j < ell; ++j)
        tm.matrix.at(i * ell + j, e) = Rat(basis.eta[e][i] * basis.eta[e][j]);
  return tm;
}

inline size_t tau_rank(const TauMap& tm) { return tm.matrix.rank(); }

inline bool is_injective(const TauMap& tm) { return tau_rank(tm) == tm.n; }

// ---------------------------------------------------------------------------
// certificates

struct LoopIsolation {
  size_t loop = 0;                  // basis column
  std::vector<size_t> edges;        // edge indices on this loop
  std::vector<size_t> isolated;     // edges some other loop meets exactly
  std::vector<size_t> not_isolated;
  bool certified = false; // at most one non-isolated edge
};

struct CertificateReport {
  bool applicable = false;               // rotation present
  std::vector<std::string> stripped_looping; // removed edge ids
  size_t vertices = 0;
  size_t loops = 0; // loop number of the stripped graph
  bool closed_2cell = false;
  bool pairwise_faces_share_at_most_one = false;
  bool every_edge_on_two_faces = false;
  std::vector<std::vector<size_t>> face_shared; // pairwise shared-edge counts
  bool strong_chain = false; // closed-2cell-face-pairs conditions
  std::vector<LoopIsolation> rows;
  std::vector<bool> edge_covered; // over stripped-graph edges
  bool loop_isolation = false;    // certified loops cover every edge
  bool certified = false;
  std::vector<std::string> chains; // names of certificate chains that hold
};

namespace detail {

inline std::vector<std::vector<size_t>> basis_loop_edge_sets(const LoopBasis& b) {
  std::vector<std::vector<size_t>> sets(b.loop_count());
  for (size_t j = 0; j < b.loop_count(); ++j) sets[j] = b.loop_edges(j);
  return sets;
}

} // namespace detail

inline CertificateReport certify_injectivity(const FeynmanGraph& g) {
  CertificateReport rep;
  if (!g.has_rotation) return rep; // not applicable without an embedding
  rep.applicable = true;

  LoopingRemoval lr = remove_looping_edges(g);
  rep.stripped_looping = lr.removed_ids;
  const FeynmanGraph& h = lr.graph;
  rep.vertices = h.num_vertices();

  FaceSet fs = trace_faces(h);
  rep.loops = h.loop_number();
  rep.closed_2cell = is_closed_2cell(h, fs);
  rep.face_shared = face_shared_edge_counts(fs, h.n());
  rep.pairwise_faces_share_at_most_one = true;
  for (size_t i = 0; i < rep.face_shared.size(); ++i)
    for (size_t j = i + 1; j < rep.face_shared.size(); ++j)
      if (rep.face_shared[i][j] > 1) rep.pairwise_faces_share_at_most_one = false;
  rep.every_edge_on_two_faces = true;
  for (const auto& faces : edge_face_incidence(fs, h.n()))
    if (faces.size() == 2 && faces[0] == faces[1]) rep.every_edge_on_two_faces = false;
  rep.strong_chain = rep.vertices >= 3 && rep.closed_2cell &&
                     rep.pairwise_faces_share_at_most_one;

  LoopBasis basis = loop_basis(h, &fs);
  auto loops = detail::basis_loop_edge_sets(basis);
  rep.edge_covered.assign(h.n(), false);
  for (size_t j = 0; j < loops.size(); ++j) {
    LoopIsolation row;
    row.loop = j;
    row.edges = loops[j];
    for (size_t e : loops[j]) {
      bool iso = false;
      for (size_t k = 0; k < loops.size() && !iso; ++k) {
        if (k == j) continue;
        // exact singleton intersection {e}
        bool only_e = false;
        for (size_t x : loops[k]) {
          if (x == e) {
            only_e = true;
          } else if (std::binary_search(loops[j].begin(), loops[j].end(), x)) {
            only_e = false;
            break;
          }
        }
        iso = only_e;
      }
      (iso ? row.isolated : row.not_isolated).push_back(e);
    }
    row.certified = row.not_isolated.size() <= 1;
    if (row.certified)
      for (size_t e : loops[j]) rep.edge_covered[e] = true;
    rep.rows.push_back(std::move(row));
  }
  rep.loop_isolation = true;
  for (size_t e = 0; e < h.n(); ++e)
    if (!rep.edge_covered[e]) rep.loop_isolation = false;

  rep.certified = rep.loop_isolation;
  if (rep.loop_isolation) rep.chains.push_back("loop-isolation");
  if (rep.strong_chain) rep.chains.push_back("closed-2cell-face-pairs");
  return rep;
}

struct MinorInjectivity {
  bool applicable = false;
  std::string reason; // why not, when not applicable
  size_t block = 0;   // rows used: entries (i,j) with i,j < block
  size_t rank = 0;
  bool injective = false;
};

// Decide injectivity from the upper-left (ell-2g)x(ell-2g) block of the loop
// matrix only; valid for closed 2-cell embeddings of loopless graphs on >= 3
// vertices with the face part of the basis first.
inline MinorInjectivity minor_injectivity(const FeynmanGraph& g, const FaceSet& fs,
                                          const LoopBasis& basis) {
  MinorInjectivity out;
  if (g.num_vertices() < 3) {
    out.reason = "fewer than 3 vertices";
    return out;
  }
  if (g.has_looping_edges()) {
    out.reason = "looping edges present";
    return out;
  }
  if (!is_closed_2cell(g, fs)) {
    out.reason = "embedding is not closed 2-cell";
    return out;
  }
  if (!basis.from_faces) {
    out.reason = "basis is not face-derived";
    return out;
  }
  out.applicable = true;
  const size_t ell = basis.loop_count();
  out.block = ell - 2 * fs.genus;
  RatMatrix m(out.block * out.block, g.n());
  for (size_t i = 0; i < out.block; ++i)
    for (size_t j = 0; j < out.block; ++j)
      for (size_t e = 0; e < g.n(); ++e)
        m.at(i * out.block + j, e) = Rat(basis.eta[e][i] * basis.eta[e][j]);
  out.rank = m.rank();
  out.injective = (out.rank == g.n());
  return out;
}

// ---------------------------------------------------------------------------
// divisor components on the matrix space

struct DivisorComponent {
  enum class Kind { offdiag, rowsum };
  Kind kind;
  size_t i = 0, j = 0; // 0-based loop indices; rowsum uses i only
  std::vector<Int> form; // ell^2 coefficients, first nonzero positive

  std::string label() const {
    if (kind == Kind::offdiag)
      return "x" + std::to_string(i + 1) + std::to_string(j + 1);
    return "row" + std::to_string(i + 1);
  }
};

// Canonical components for given loop count and genus: off-diagonals x_ij,
// 1 <= i < j <= f-1 in lex order, then the f-1 row sums over the leading
// block.  C(f,2) components, f = ell - 2g + 1.
inline std::vector<DivisorComponent> sigma_lg(size_t ell, size_t genus) {
  require_input(ell >= 2 * genus, "genus too large for loop count");
  const size_t f = ell - 2 * genus + 1;
  require_input(f >= 1, "face count must be positive");
  std::vector<DivisorComponent> out;
  auto form_at = [ell](std::initializer_list<std::pair<size_t, size_t>> entries) {
    std::vector<Int> v(ell * ell, Int(0));
    for (auto [a, b] : entries) v[a * ell + b] = 1;
    return v;
  };
  for (size_t i = 0; i + 1 < f; ++i)
    for (size_t j = i + 1; j + 1 < f; ++j)
      out.push_back({DivisorComponent::Kind::offdiag, i, j, form_at({{i, j}})});
  for (size_t i = 0; i + 1 < f; ++i) {
    std::vector<Int> v(ell * ell, Int(0));
    for (size_t k = 0; k + 1 < f; ++k) v[i * ell + k] = 1;
    out.push_back({DivisorComponent::Kind::rowsum, i, i, std::move(v)});
  }
  return out;
}

struct DivisorSelection {
  size_t loops = 0;
  size_t genus = 0;
  std::vector<size_t> indices; // selected components, canonical order

  size_t component_count() const {
    const size_t f = loops - 2 * genus + 1;
    return f * (f - 1) / 2;
  }

  std::string mask() const {
    std::string s(component_count(), '0');
    for (size_t i : indices) s[i] = '1';
    return s;
  }
};

inline DivisorSelection selection_from_mask(size_t ell, size_t genus, const std::string& mask) {
  DivisorSelection sel{ell, genus, {}};
  require_input(mask.size() == sel.component_count(),
                "selection mask needs " + std::to_string(sel.component_count()) +
                    " characters, got " + std::to_string(mask.size()));
  for (size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] == '1')
      sel.indices.push_back(i);
    else
      require_input(mask[i] == '0', "selection mask must be over {0,1}");
  }
  return sel;
}

// ---------------------------------------------------------------------------
// pullback of the divisor along tau

struct SigmaPullback {
  size_t component = 0;
  std::vector<Rat> coeffs; // over edge variables
  bool single_edge = false;
  size_t edge = 0; // valid when single_edge
  Rat scale;       // the nonzero multiple
};

struct SigmaReport {
  size_t loops = 0, genus = 0;
  std::vector<DivisorComponent> components;
  std::vector<SigmaPullback> pullbacks;
  DivisorSelection selection;
  std::vector<bool> edge_covered;
  bool covered = false; // every edge variable hit by a selected component
};

inline SigmaReport sigma_gamma(const FeynmanGraph& g, const FaceSet& fs, const LoopBasis& basis,
                               const TauMap& tm) {
  SigmaReport rep;
  rep.loops = basis.loop_count();
  rep.genus = fs.genus;
  rep.components = sigma_lg(rep.loops, rep.genus);
  rep.selection = {rep.loops, rep.genus, {}};
  rep.edge_covered.assign(g.n(), false);
  for (size_t c = 0; c < rep.components.size(); ++c) {
    SigmaPullback pb;
    pb.component = c;
    pb.coeffs.assign(g.n(), Rat(0));
    for (size_t r = 0; r < tm.loops * tm.loops; ++r) {
      if (rep.components[c].form[r] == 0) continue;
      Rat f(rep.components[c].form[r]);
      for (size_t e = 0; e < g.n(); ++e) pb.coeffs[e] += f * tm.matrix.at(r, e);
    }
    size_t nonzero = 0, where = 0;
    for (size_t e = 0; e < g.n(); ++e)
      if (pb.coeffs[e] != 0) {
        ++nonzero;
        where = e;
      }
    if (nonzero == 1) {
      pb.single_edge = true;
      pb.edge = where;
      pb.scale = pb.coeffs[where];
      rep.selection.indices.push_back(c);
      rep.edge_covered[where] = true;
    }
    rep.pullbacks.push_back(std::move(pb));
  }
  rep.covered = true;
  for (size_t e = 0; e < g.n(); ++e)
    if (!rep.edge_covered[e]) rep.covered = false;
  return rep;
}

} // namespace psidet
