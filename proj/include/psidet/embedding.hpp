/*
 * Rotation systems as embeddings: face tracing, genus via the Euler
 * relation, the closed-2-cell test (every face walk a simple cycle), cycle
 * bases read off from faces, and a gated brute-force search over all
 * rotation systems of a graph.
 *
 * Face tracing convention: a directed dart (e, forward) runs src->dst.  On
 * arrival at the head vertex, the walk leaves through the rotation successor
 * of the arrival slot.  Faces are collected in first-encounter order,
 * scanning directed darts in index order, so face order is deterministic.
 */
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psidet/graph.hpp"
#include "psidet/matrix.hpp"

namespace psidet {

struct FaceWalk {
  std::vector<std::pair<size_t, bool>> steps; // (edge index, traversed forward?)
};

struct FaceSet {
  std::vector<FaceWalk> faces;
  size_t genus = 0;
  size_t face_count() const { return faces.size(); }
};

inline FaceSet trace_faces(const FeynmanGraph& g) {
  require_input(g.has_rotation, "graph '" + g.name + "' carries no rotation system");
  const size_t n = g.n();
  FaceSet fs;
  if (n == 0) {
    fs.faces.push_back({}); // a lone vertex on the sphere
    fs.genus = 0;
    return fs;
  }
  // slot lookup: (edge, end) -> (vertex, position)
  std::vector<std::array<std::pair<size_t, size_t>, 2>> pos(n);
  for (size_t v = 0; v < g.num_vertices(); ++v)
    for (size_t i = 0; i < g.rotation[v].size(); ++i) {
      const Dart& d = g.rotation[v][i];
      pos[d.edge][d.end == End::src ? 0 : 1] = {v, i};
    }
  auto next_dart = [&](size_t dart) -> size_t {
    size_t e = dart >> 1;
    bool fwd = (dart & 1) == 0;
    auto [v, i] = pos[e][fwd ? 1 : 0]; // arrival slot at the head vertex
    const auto& rot = g.rotation[v];
    const Dart& out = rot[(i + 1) % rot.size()];
    return (out.edge << 1) | (out.end == End::src ? 0 : 1);
  };
  std::vector<bool> used(2 * n, false);
  for (size_t d0 = 0; d0 < 2 * n; ++d0) {
    if (used[d0]) continue;
    FaceWalk w;
    size_t d = d0;
    do {
      require_internal(!used[d], "face tracing revisited a dart");
      used[d] = true;
      w.steps.push_back({d >> 1, (d & 1) == 0});
      d = next_dart(d);
    } while (d != d0);
    fs.faces.push_back(std::move(w));
  }
  const long defect = 2 - static_cast<long>(g.num_vertices()) + static_cast<long>(n) -
                      static_cast<long>(fs.faces.size());
  require_internal(defect >= 0 && defect % 2 == 0, "Euler relation defect is not an even nonnegative number");
  fs.genus = static_cast<size_t>(defect / 2);
  return fs;
}

struct ClosedCellReport {
  bool all_simple = true;
  std::vector<bool> face_simple;
};

// A face walk is simple when it repeats no vertex and no edge.
inline ClosedCellReport closed_2cell_report(const FeynmanGraph& g, const FaceSet& fs) {
  ClosedCellReport rep;
  for (const FaceWalk& w : fs.faces) {
    std::map<size_t, int> vseen, eseen;
    bool simple = true;
    for (const auto& [e, fwd] : w.steps) {
      size_t tail = fwd ? g.edges[e].src : g.edges[e].dst;
      if (++vseen[tail] > 1) simple = false;
      if (++eseen[e] > 1) simple = false;
    }
    rep.face_simple.push_back(simple);
    if (!simple) rep.all_simple = false;
  }
  return rep;
}

inline bool is_closed_2cell(const FeynmanGraph& g, const FaceSet& fs) {
  return closed_2cell_report(g, fs).all_simple;
}

// shared-edge counts between pairs of distinct faces
inline std::vector<std::vector<size_t>> face_shared_edge_counts(const FaceSet& fs, size_t n) {
  const size_t f = fs.face_count();
  std::vector<std::vector<size_t>> shared(f, std::vector<size_t>(f, 0));
  std::vector<std::vector<size_t>> touching(n);
  for (size_t i = 0; i < f; ++i)
    for (const auto& [e, fwd] : fs.faces[i].steps) touching[e].push_back(i);
  for (size_t e = 0; e < n; ++e) {
    const auto& t = touching[e];
    if (t.size() == 2 && t[0] != t[1]) {
      ++shared[t[0]][t[1]];
      ++shared[t[1]][t[0]];
    }
  }
  return shared;
}

// face indices touching each edge (multiplicity preserved; always 2 entries)
inline std::vector<std::vector<size_t>> edge_face_incidence(const FaceSet& fs, size_t n) {
  std::vector<std::vector<size_t>> touching(n);
  for (size_t i = 0; i < fs.face_count(); ++i)
    for (const auto& [e, fwd] : fs.faces[i].steps) touching[e].push_back(i);
  return touching;
}

// ---------------------------------------------------------------------------
// cycle bases

struct LoopBasis {
  // eta[e][j]: signed incidence of edge e with basis loop j
  std::vector<std::vector<int>> eta;
  bool from_faces = false;
  size_t external_face = SIZE_MAX; // face excluded from the basis (faces mode)
  size_t face_columns = 0;         // leading columns that come from faces
  std::vector<size_t> face_of_column;

  size_t loop_count() const { return eta.empty() ? 0 : eta[0].size(); }

  std::vector<size_t> loop_edges(size_t j) const {
    std::vector<size_t> out;
    for (size_t e = 0; e < eta.size(); ++e)
      if (eta[e][j] != 0) out.push_back(e);
    return out;
  }
};

namespace detail {

inline size_t int_columns_rank(const std::vector<std::vector<int>>& eta, size_t upto_cols) {
  if (eta.empty() || upto_cols == 0) return 0;
  RatMatrix m(upto_cols, eta.size());
  for (size_t j = 0; j < upto_cols; ++j)
    for (size_t e = 0; e < eta.size(); ++e) m.at(j, e) = Rat(eta[e][j]);
  return m.rank();
}

// signed fundamental cycle of a non-tree edge against a fixed spanning tree
inline std::vector<int> fundamental_cycle(const FeynmanGraph& g, const std::vector<size_t>& tree,
                                          size_t chord) {
  std::vector<int> col(g.n(), 0);
  if (g.is_looping(chord)) {
    col[chord] = 1;
    return col;
  }
  // BFS through tree edges from chord.dst back to chord.src
  const size_t V = g.num_vertices();
  std::vector<long> parent_edge(V, -1);
  std::vector<size_t> parent(V, SIZE_MAX);
  std::vector<bool> seen(V, false);
  std::vector<size_t> queue = {g.edges[chord].dst};
  seen[g.edges[chord].dst] = true;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    size_t v = queue[qi];
    for (size_t te : tree) {
      const InternalEdge& e = g.edges[te];
      size_t other;
      if (e.src == v)
        other = e.dst;
      else if (e.dst == v)
        other = e.src;
      else
        continue;
      if (seen[other]) continue;
      seen[other] = true;
      parent[other] = v;
      parent_edge[other] = static_cast<long>(te);
      queue.push_back(other);
    }
  }
  require_internal(seen[g.edges[chord].src], "spanning tree does not connect chord endpoints");
  col[chord] = 1;
  // the cycle returns from chord.dst to chord.src, i.e. opposite to the
  // parent walk below, so each walked edge enters with reversed sign
  size_t v = g.edges[chord].src;
  while (v != g.edges[chord].dst) {
    size_t te = static_cast<size_t>(parent_edge[v]);
    const InternalEdge& e = g.edges[te];
    col[te] += (e.src == v) ? -1 : 1;
    v = parent[v];
  }
  return col;
}

inline std::vector<size_t> greedy_spanning_tree(const FeynmanGraph& g) {
  DSU dsu(g.num_vertices());
  std::vector<size_t> tree;
  for (size_t e = 0; e < g.n(); ++e)
    if (dsu.unite(g.edges[e].src, g.edges[e].dst)) tree.push_back(e);
  return tree;
}

} // namespace detail

// Basis of the cycle space.  With a face set: one column per internal face
// (external face defaults to the last-listed one), completed by fundamental
// cycles of a spanning tree when the genus is positive.  Without: spanning
// tree fundamental cycles only.
inline LoopBasis loop_basis(const FeynmanGraph& g, const FaceSet* fs = nullptr,
                            std::optional<size_t> external_face = std::nullopt) {
  const size_t n = g.n(), ell = g.loop_number();
  LoopBasis b;
  b.eta.assign(n, {});
  auto push_column = [&b, n](const std::vector<int>& col) {
    for (size_t e = 0; e < n; ++e) b.eta[e].push_back(col[e]);
  };
  if (fs != nullptr) {
    b.from_faces = true;
    const size_t f = fs->face_count();
    require_internal(ell + 1 == f + 2 * fs->genus, "Euler relation broken in loop_basis");
    size_t ext = external_face.value_or(f - 1);
    require_input(ext < f, "external face index out of range");
    b.external_face = ext;
    for (size_t i = 0; i < f; ++i) {
      if (i == ext) continue;
      std::vector<int> col(n, 0);
      for (const auto& [e, fwd] : fs->faces[i].steps) col[e] += fwd ? 1 : -1;
      push_column(col);
      b.face_of_column.push_back(i);
    }
    b.face_columns = f - 1;
    require_internal(detail::int_columns_rank(b.eta, b.face_columns) == b.face_columns,
                     "face cycles are not independent");
    if (fs->genus > 0) {
      // Complete the face columns to a basis of the full integer cycle
      // lattice (not merely a full-rank set, which can span a proper
      // finite-index sublattice and break determinant identities).  The
      // fundamental cycles of a spanning tree are a lattice basis with an
      // identity block on the chord rows, so lattice coordinates of the face
      // columns can be read off directly; Hermite elimination with a tracked
      // inverse then extends them unimodularly.
      std::vector<size_t> tree = detail::greedy_spanning_tree(g);
      std::vector<bool> in_tree(n, false);
      for (size_t te : tree) in_tree[te] = true;
      std::vector<size_t> chords;
      for (size_t e = 0; e < n; ++e)
        if (!in_tree[e]) chords.push_back(e);
      require_internal(chords.size() == ell, "chord count disagrees with loop number");
      std::vector<std::vector<int>> bcols;
      for (size_t e : chords) bcols.push_back(detail::fundamental_cycle(g, tree, e));

      const size_t fcols = b.face_columns;
      std::vector<std::vector<Int>> c(ell, std::vector<Int>(fcols, Int(0)));
      for (size_t k = 0; k < ell; ++k)
        for (size_t j = 0; j < fcols; ++j) c[k][j] = Int(b.eta[chords[k]][j]);
      std::vector<std::vector<Int>> einv(ell, std::vector<Int>(ell, Int(0)));
      for (size_t k = 0; k < ell; ++k) einv[k][k] = 1;
      Int diag(1);
      for (size_t j = 0; j < fcols; ++j) {
        while (true) {
          size_t best = SIZE_MAX;
          for (size_t r = j; r < ell; ++r)
            if (c[r][j] != 0 &&
                (best == SIZE_MAX ||
                 mpz_cmpabs(c[r][j].get_mpz_t(), c[best][j].get_mpz_t()) < 0))
              best = r;
          require_internal(best != SIZE_MAX, "face cycles are not independent over the integers");
          if (best != j) {
            std::swap(c[j], c[best]);
            for (size_t k = 0; k < ell; ++k) std::swap(einv[k][j], einv[k][best]);
          }
          bool again = false;
          for (size_t r = j + 1; r < ell; ++r) {
            if (c[r][j] == 0) continue;
            Int q = c[r][j] / c[j][j]; // truncated, |remainder| < |pivot|
            if (q != 0) {
              for (size_t s = j; s < fcols; ++s) c[r][s] -= q * c[j][s];
              for (size_t k = 0; k < ell; ++k) einv[k][j] += q * einv[k][r];
            }
            if (c[r][j] != 0) again = true;
          }
          if (!again) break;
        }
        diag *= c[j][j];
      }
      require_internal(diag == 1 || diag == -1,
                       "face cycles do not span a primitive sublattice");
      for (size_t k = fcols; k < ell; ++k) {
        std::vector<int> col(n, 0);
        for (size_t e = 0; e < n; ++e) {
          Int acc(0);
          for (size_t m = 0; m < ell; ++m) acc += einv[m][k] * bcols[m][e];
          require_internal(acc.fits_sint_p(), "completion coefficient overflow");
          col[e] = static_cast<int>(acc.get_si());
        }
        push_column(col);
      }
    }
  } else {
    std::vector<size_t> tree = detail::greedy_spanning_tree(g);
    std::vector<bool> in_tree(n, false);
    for (size_t te : tree) in_tree[te] = true;
    for (size_t e = 0; e < n; ++e)
      if (!in_tree[e]) push_column(detail::fundamental_cycle(g, tree, e));
  }
  require_internal(b.loop_count() == ell && detail::int_columns_rank(b.eta, ell) == ell,
                   "loop basis has wrong rank");
  return b;
}

// ---------------------------------------------------------------------------
// brute-force enumeration of rotation systems

inline constexpr unsigned long rotation_enum_limit = 1000000;

inline unsigned long rotation_system_count(const FeynmanGraph& g) {
  unsigned long total = 1;
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    size_t d = g.degree(v);
    for (size_t k = 2; k + 1 < d + 1; ++k) {
      total *= k; // (d-1)!
      if (total > rotation_enum_limit) return total;
    }
  }
  return total;
}

// Calls fn(graph-with-rotation, faces) for every rotation system; fn returns
// false to stop early.  Hard-gated by rotation_system_count.
template <class F>
void for_each_rotation_system(const FeynmanGraph& g, F&& fn) {
  unsigned long total = rotation_system_count(g);
  if (total > rotation_enum_limit)
    throw_resource("rotation-system enumeration would visit " + std::to_string(total) +
                   " systems; the gate is " + std::to_string(rotation_enum_limit));
  const size_t V = g.num_vertices();
  std::vector<std::vector<Dart>> darts(V);
  for (size_t e = 0; e < g.n(); ++e) {
    darts[g.edges[e].src].push_back({e, End::src});
    darts[g.edges[e].dst].push_back({e, End::dst});
  }
  FeynmanGraph work = g;
  work.has_rotation = true;
  work.rotation.assign(V, {});
  bool stop = false;
  // permute all slots after the first at each vertex
  std::vector<std::vector<size_t>> perm(V);
  for (size_t v = 0; v < V; ++v) {
    perm[v].resize(darts[v].empty() ? 0 : darts[v].size() - 1);
    for (size_t i = 0; i < perm[v].size(); ++i) perm[v][i] = i + 1;
  }
  auto apply = [&](size_t v) {
    work.rotation[v].clear();
    if (darts[v].empty()) return;
    work.rotation[v].push_back(darts[v][0]);
    for (size_t i : perm[v]) work.rotation[v].push_back(darts[v][i]);
  };
  std::function<void(size_t)> rec = [&](size_t v) {
    if (stop) return;
    if (v == V) {
      FaceSet fs = trace_faces(work);
      if (!fn(const_cast<const FeynmanGraph&>(work), fs)) stop = true;
      return;
    }
    if (perm[v].size() <= 1) {
      apply(v);
      rec(v + 1);
      return;
    }
    std::sort(perm[v].begin(), perm[v].end());
    do {
      apply(v);
      rec(v + 1);
      if (stop) return;
    } while (std::next_permutation(perm[v].begin(), perm[v].end()));
  };
  for (size_t v = 0; v < V; ++v) apply(v);
  rec(0);
}

struct EmbeddingSearchOpts {
  size_t max_genus = SIZE_MAX;
  bool require_closed_2cell = false;
  bool require_pairwise_faces_share_at_most_one = false;
  size_t max_results = 1;
};

struct EmbeddingSearchResult {
  std::vector<FeynmanGraph> found; // copies of g carrying matching rotations
  size_t rotations_tested = 0;
  size_t min_genus_seen = SIZE_MAX;
};

inline EmbeddingSearchResult search_embeddings(const FeynmanGraph& g, const EmbeddingSearchOpts& opts) {
  EmbeddingSearchResult res;
  for_each_rotation_system(g, [&](const FeynmanGraph& h, const FaceSet& fs) {
    ++res.rotations_tested;
    res.min_genus_seen = std::min(res.min_genus_seen, fs.genus);
    if (fs.genus > opts.max_genus) return true;
    if (opts.require_closed_2cell && !is_closed_2cell(h, fs)) return true;
    if (opts.require_pairwise_faces_share_at_most_one) {
      auto shared = face_shared_edge_counts(fs, h.n());
      for (size_t i = 0; i < shared.size(); ++i)
        for (size_t j = i + 1; j < shared.size(); ++j)
          if (shared[i][j] > 1) return true;
    }
    res.found.push_back(h);
    return res.found.size() < opts.max_results;
  });
  return res;
}

} // namespace psidet
