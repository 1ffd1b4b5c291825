/*
 * Combinatorial graph operations: spanning trees, cut-sets, connectivity
 * levels (1PI / k-edge / k-vertex), vertex splittings, and the small
 * surgeries (subdividing an edge, adding and removing looping edges).
 *
 * Subset enumerations are hard-gated to n <= 16 internal edges.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "psidet/graph.hpp"

namespace psidet {

inline constexpr size_t subset_enum_edge_limit = 16;

namespace detail {

inline void require_subset_gate(const FeynmanGraph& g, const char* what) {
  if (g.n() > subset_enum_edge_limit)
    throw_resource(std::string(what) + ": " + std::to_string(g.n()) +
                   " internal edges exceeds the subset-enumeration gate of " +
                   std::to_string(subset_enum_edge_limit));
}

// all k-subsets of {0..n-1} in lexicographic order
template <class F>
void for_each_subset(size_t n, size_t k, F&& fn) {
  if (k > n) return;
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(const_cast<const std::vector<size_t>&>(idx));
    size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    if (idx[i] == i + n - k) return;
    ++idx[i];
    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline size_t components_without(const FeynmanGraph& g, const std::vector<bool>& edge_removed) {
  DSU dsu(g.num_vertices());
  for (size_t e = 0; e < g.n(); ++e)
    if (!edge_removed[e]) dsu.unite(g.edges[e].src, g.edges[e].dst);
  return dsu.component_count(g.num_vertices());
}

} // namespace detail

// Spanning trees as sorted lists of internal edge indices, lexicographic.
inline std::vector<std::vector<size_t>> spanning_trees(const FeynmanGraph& g) {
  detail::require_subset_gate(g, "spanning_trees");
  const size_t v = g.num_vertices(), n = g.n();
  std::vector<std::vector<size_t>> trees;
  if (v == 1) {
    trees.push_back({}); // the empty tree spans a single vertex
    return trees;
  }
  if (v - 1 > n) return trees;
  detail::for_each_subset(n, v - 1, [&](const std::vector<size_t>& idx) {
    detail::DSU dsu(v);
    for (size_t e : idx)
      if (!dsu.unite(g.edges[e].src, g.edges[e].dst)) return; // cycle
    trees.push_back(idx);
  });
  return trees;
}

// Cut-sets: (loop_number+1)-subsets of internal edges whose removal leaves
// exactly two connected components.
inline std::vector<std::vector<size_t>> cut_sets(const FeynmanGraph& g) {
  detail::require_subset_gate(g, "cut_sets");
  const size_t n = g.n(), k = g.loop_number() + 1;
  std::vector<std::vector<size_t>> cuts;
  std::vector<bool> removed(n, false);
  detail::for_each_subset(n, k, [&](const std::vector<size_t>& idx) {
    for (size_t e : idx) removed[e] = true;
    if (detail::components_without(g, removed) == 2) cuts.push_back(idx);
    for (size_t e : idx) removed[e] = false;
  });
  return cuts;
}

// k-edge-connected: cannot be disconnected by deleting k-1 or fewer edges.
inline bool is_k_edge_connected(const FeynmanGraph& g, size_t k) {
  if (!graph_is_connected(g)) return false;
  detail::require_subset_gate(g, "is_k_edge_connected");
  const size_t n = g.n();
  std::vector<bool> removed(n, false);
  for (size_t j = 1; j + 1 <= k; ++j) {
    bool splits = false;
    detail::for_each_subset(n, j, [&](const std::vector<size_t>& idx) {
      if (splits) return;
      for (size_t e : idx) removed[e] = true;
      if (detail::components_without(g, removed) > 1) splits = true;
      for (size_t e : idx) removed[e] = false;
    });
    if (splits) return false;
  }
  return true;
}

inline bool is_one_pi(const FeynmanGraph& g) { return is_k_edge_connected(g, 2); }

namespace detail {

inline bool connected_without_vertices(const FeynmanGraph& g, const std::vector<bool>& gone) {
  size_t kept = 0;
  for (size_t v = 0; v < g.num_vertices(); ++v)
    if (!gone[v]) ++kept;
  if (kept == 0) return false;
  DSU dsu(g.num_vertices());
  for (const auto& e : g.edges)
    if (!gone[e.src] && !gone[e.dst]) dsu.unite(e.src, e.dst);
  std::optional<size_t> root;
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    if (gone[v]) continue;
    size_t r = dsu.find(v);
    if (!root)
      root = r;
    else if (*root != r)
      return false;
  }
  return true;
}

} // namespace detail

// 2-vertex-connected: no looping edges, >= 3 vertices, no cut vertex.
inline bool is_two_vertex_connected(const FeynmanGraph& g) {
  if (g.has_looping_edges() || g.num_vertices() < 3 || !graph_is_connected(g)) return false;
  std::vector<bool> gone(g.num_vertices(), false);
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    gone[v] = true;
    bool ok = detail::connected_without_vertices(g, gone);
    gone[v] = false;
    if (!ok) return false;
  }
  return true;
}

// 3-vertex-connected: additionally no multiple edges, >= 4 vertices, and no
// pair of vertices disconnects.
inline bool is_three_vertex_connected(const FeynmanGraph& g) {
  if (g.has_looping_edges() || g.has_multiple_edges()) return false;
  if (g.num_vertices() < 4 || !graph_is_connected(g)) return false;
  std::vector<bool> gone(g.num_vertices(), false);
  for (size_t a = 0; a < g.num_vertices(); ++a) {
    gone[a] = true;
    if (!detail::connected_without_vertices(g, gone)) {
      gone[a] = false;
      return false;
    }
    for (size_t b = a + 1; b < g.num_vertices(); ++b) {
      gone[b] = true;
      bool ok = detail::connected_without_vertices(g, gone);
      gone[b] = false;
      if (!ok) {
        gone[a] = false;
        return false;
      }
    }
    gone[a] = false;
  }
  return true;
}

struct ConnectivityReport {
  bool connected = false;
  bool has_looping = false;
  bool has_multiple = false;
  bool one_pi = false;            // 2-edge-connected
  bool three_edge = false;        // 3-edge-connected
  bool two_vertex = false;
  bool three_vertex = false;
};

inline ConnectivityReport connectivity_report(const FeynmanGraph& g) {
  ConnectivityReport r;
  r.connected = graph_is_connected(g);
  r.has_looping = g.has_looping_edges();
  r.has_multiple = g.has_multiple_edges();
  r.one_pi = is_one_pi(g);
  r.three_edge = is_k_edge_connected(g, 3);
  r.two_vertex = is_two_vertex_connected(g);
  r.three_vertex = is_three_vertex_connected(g);
  return r;
}

// ---------------------------------------------------------------------------
// vertex splittings

// One attachment at the split vertex: an internal edge end (a looping edge
// counts once and moves as a whole) or an external leg.
struct VertexAttachment {
  bool external;
  size_t index; // into edges or externals
};

inline std::vector<VertexAttachment> vertex_attachments(const FeynmanGraph& g, size_t v) {
  std::vector<VertexAttachment> items;
  for (size_t e = 0; e < g.n(); ++e)
    if (g.edges[e].src == v || g.edges[e].dst == v) items.push_back({false, e});
  for (size_t x = 0; x < g.externals.size(); ++x)
    if (g.externals[x].at == v) items.push_back({true, x});
  return items;
}

// All splittings of vertex v: unordered bipartitions of its attachments into
// two nonempty parts, with a fresh edge joining the two copies of v.
// (2^d - 2)/2 results for d attachments.  Rotations do not survive splitting.
inline std::vector<FeynmanGraph> vertex_splittings(const FeynmanGraph& g, size_t v) {
  require_input(v < g.num_vertices(), "vertex index out of range");
  std::vector<VertexAttachment> items = vertex_attachments(g, v);
  const size_t m = items.size();
  std::vector<FeynmanGraph> out;
  if (m < 2) return out;
  require_input(m <= 20, "vertex degree too large for splitting enumeration");
  const std::string v2_id = g.fresh_vertex_id(g.vertices[v] + "_s");
  const std::string new_edge_id = g.fresh_edge_id("esplit");
  const uint32_t full = (1u << m) - 1;
  for (uint32_t mask = 1; mask < full; mask += 2) { // bit0 always in part A
    FeynmanGraph h;
    h.name = g.name + "/split";
    h.vertices = g.vertices;
    h.vertices.push_back(v2_id);
    const size_t v2 = h.vertices.size() - 1;
    h.edges = g.edges;
    h.externals = g.externals;
    for (size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) continue; // part A stays at v
      if (items[i].external) {
        h.externals[items[i].index].at = v2;
      } else {
        InternalEdge& e = h.edges[items[i].index];
        if (e.src == v) e.src = v2;
        if (e.dst == v) e.dst = v2;
      }
    }
    h.edges.push_back({new_edge_id, v, v2});
    out.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------------------
// surgeries

inline FeynmanGraph add_looping_edge(const FeynmanGraph& g, size_t v, const std::string& id_hint = "loop") {
  require_input(v < g.num_vertices(), "vertex index out of range");
  FeynmanGraph h = g;
  const std::string id = g.fresh_edge_id(id_hint);
  h.edges.push_back({id, v, v});
  if (h.has_rotation) {
    // adjacent slots keep the embedding valid: the new edge bounds a monogon
    const size_t e = h.edges.size() - 1;
    h.rotation[v].insert(h.rotation[v].begin(), {Dart{e, End::src}, Dart{e, End::dst}});
  }
  return h;
}

struct LoopingRemoval {
  FeynmanGraph graph;
  std::vector<std::string> removed_ids;
  std::vector<size_t> kept_old_indices; // new edge index -> old edge index
};

inline LoopingRemoval remove_looping_edges(const FeynmanGraph& g) {
  LoopingRemoval out;
  out.graph.name = g.name;
  out.graph.vertices = g.vertices;
  out.graph.externals = g.externals;
  std::vector<size_t> new_index(g.n(), SIZE_MAX);
  for (size_t e = 0; e < g.n(); ++e) {
    if (g.is_looping(e)) {
      out.removed_ids.push_back(g.edges[e].id);
      continue;
    }
    new_index[e] = out.graph.edges.size();
    out.kept_old_indices.push_back(e);
    out.graph.edges.push_back(g.edges[e]);
  }
  if (g.has_rotation) {
    out.graph.has_rotation = true;
    out.graph.rotation.assign(g.num_vertices(), {});
    for (size_t v = 0; v < g.num_vertices(); ++v)
      for (const Dart& d : g.rotation[v])
        if (new_index[d.edge] != SIZE_MAX)
          out.graph.rotation[v].push_back({new_index[d.edge], d.end});
  }
  return out;
}

// Replace edge e by a path of two edges through a fresh valence-2 vertex.
// The two replacement ids are returned; rotations are preserved.
struct Subdivision {
  FeynmanGraph graph;
  std::string first_id;  // src -> new vertex, stored at the old edge position
  std::string second_id; // new vertex -> dst, appended at the end
};

inline Subdivision subdivide_edge(const FeynmanGraph& g, size_t e) {
  require_input(e < g.n(), "edge index out of range");
  Subdivision out;
  FeynmanGraph& h = out.graph;
  h = g;
  const std::string wid = g.fresh_vertex_id(g.edges[e].id + "_v");
  h.vertices.push_back(wid);
  const size_t w = h.vertices.size() - 1;
  out.first_id = g.fresh_edge_id(g.edges[e].id + "a");
  out.second_id = g.fresh_edge_id(g.edges[e].id + "b");
  const size_t src = g.edges[e].src, dst = g.edges[e].dst;
  h.edges[e] = {out.first_id, src, w};
  h.edges.push_back({out.second_id, w, dst});
  const size_t e2 = h.edges.size() - 1;
  if (h.has_rotation) {
    // old (e,dst) slot now belongs to the second half
    for (auto& slots : h.rotation)
      for (Dart& d : slots)
        if (d.edge == e && d.end == End::dst) d = {e2, End::dst};
    h.rotation.push_back({Dart{e, End::dst}, Dart{e2, End::src}});
  }
  return out;
}

} // namespace psidet
