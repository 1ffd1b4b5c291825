/* Seeded graph generators for property tests.
 *
 * Two families: connected multigraphs (loops and parallel edges allowed,
 * no embedding) and planar-embedded graphs grown from a triangle by
 * face-preserving surgeries.  Everything is a pure function of the RNG
 * state, so a fixed seed reproduces the same corpus on every run.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "psidet/embedding.hpp"
#include "psidet/errors.hpp"
#include "psidet/graph.hpp"
#include "psidet/graphalg.hpp"

namespace psidet {

// Uniform-ish pick in [0, m).  Plain modulo keeps the sequence independent
// of the standard library's distribution implementations; the bias is
// irrelevant at these sizes.
inline size_t pick(std::mt19937_64& rng, size_t m) {
  require_internal(m > 0, "pick from an empty range");
  return static_cast<size_t>(rng() % m);
}

inline FeynmanGraph random_connected_multigraph(std::mt19937_64& rng, size_t max_edges = 10) {
  require_input(max_edges >= 1, "multigraph generator needs room for at least one edge");
  FeynmanGraph g;
  g.name = "random_multigraph";
  const size_t max_vertices = std::min<size_t>(8, max_edges + 1);
  const size_t nv = 1 + pick(rng, max_vertices);
  for (size_t v = 0; v < nv; ++v) g.vertices.push_back("v" + std::to_string(v + 1));
  auto add_edge = [&g, &rng](size_t u, size_t v) {
    if (u != v && (rng() & 1)) std::swap(u, v);
    g.edges.push_back({"t" + std::to_string(g.n() + 1), u, v});
  };
  // random recursive tree keeps the graph connected
  for (size_t v = 1; v < nv; ++v) add_edge(pick(rng, v), v);
  const size_t spare = max_edges - (nv - 1);
  const size_t extra = pick(rng, spare + 1);
  for (size_t k = 0; k < extra; ++k) add_edge(pick(rng, nv), pick(rng, nv));
  if (g.n() == 0) add_edge(0, 0);
  return g;
}

// ---------------------------------------------------------------------------
// planar-embedded graphs

// a triangle on the sphere: two faces, genus zero
inline FeynmanGraph planar_seed() {
  FeynmanGraph g;
  g.name = "random_planar";
  g.vertices = {"v1", "v2", "v3"};
  g.edges = {{"t1", 0, 1}, {"t2", 1, 2}, {"t3", 2, 0}};
  g.has_rotation = true;
  g.rotation = {{{0, End::src}, {2, End::dst}},
                {{1, End::src}, {0, End::dst}},
                {{2, End::src}, {1, End::dst}}};
  return g;
}

// Connect two corners of one face with a new edge.  The corner after step k
// of a face walk sits at the head of that dart, between the arrival slot and
// the slot the walk leaves through; inserting the new darts there splits the
// face in two and leaves the genus unchanged.  The two corners may share a
// vertex (the chord becomes a looping edge) or the endpoints of an existing
// edge (a parallel edge).
inline FeynmanGraph add_face_chord(const FeynmanGraph& g, const FaceWalk& walk, size_t step_a,
                                   size_t step_b, const std::string& id_hint = "c") {
  require_input(g.has_rotation, "face chord needs a rotation system");
  require_input(step_a < walk.steps.size() && step_b < walk.steps.size(),
                "face walk step out of range");
  require_input(step_a != step_b, "face chord needs two distinct corners");
  auto corner = [&g](const std::pair<size_t, bool>& st) {
    const size_t e = st.first;
    const bool fwd = st.second;
    const size_t head = fwd ? g.edges[e].dst : g.edges[e].src;
    const Dart arrival{e, fwd ? End::dst : End::src};
    return std::pair<size_t, size_t>{head, g.rotation_slot(head, arrival)};
  };
  const auto [u, su] = corner(walk.steps[step_a]);
  const auto [v, sv] = corner(walk.steps[step_b]);
  FeynmanGraph h = g;
  const std::string id = g.fresh_edge_id(id_hint);
  h.edges.push_back({id, u, v});
  const size_t e = h.edges.size() - 1;
  const Dart at_u{e, End::src}, at_v{e, End::dst};
  if (u == v) {
    // same rotation list: insert at the higher slot first so the lower
    // one keeps its index
    auto& rot = h.rotation[u];
    if (su > sv) {
      rot.insert(rot.begin() + static_cast<long>(su) + 1, at_u);
      rot.insert(rot.begin() + static_cast<long>(sv) + 1, at_v);
    } else {
      rot.insert(rot.begin() + static_cast<long>(sv) + 1, at_v);
      rot.insert(rot.begin() + static_cast<long>(su) + 1, at_u);
    }
  } else {
    h.rotation[u].insert(h.rotation[u].begin() + static_cast<long>(su) + 1, at_u);
    h.rotation[v].insert(h.rotation[v].begin() + static_cast<long>(sv) + 1, at_v);
  }
  return h;
}

// Grow a sphere embedding by repeated surgeries.  Chords dominate the mix:
// they keep a healthy share of the output certifiable, while subdivisions
// (which force valence-2 vertices, hence non-injective tau) and looping
// edges keep the corpus from being one-sided.
inline FeynmanGraph random_planar_graph(std::mt19937_64& rng, size_t max_edges = 12) {
  FeynmanGraph g = planar_seed();
  require_input(max_edges >= g.n(), "edge cap below the seed graph");
  while (g.n() < max_edges) {
    const size_t op = pick(rng, 6);
    if (op == 0) {
      g = subdivide_edge(g, pick(rng, g.n())).graph;
      continue;
    }
    if (op == 1) {
      g = add_looping_edge(g, pick(rng, g.num_vertices()));
      continue;
    }
    const FaceSet fs = trace_faces(g);
    const FaceWalk& w = fs.faces[pick(rng, fs.faces.size())];
    if (w.steps.size() < 2) continue; // monogon: no pair of corners
    const size_t a = pick(rng, w.steps.size());
    const size_t b = pick(rng, w.steps.size());
    if (a == b) continue;
    g = add_face_chord(g, w, a, b);
  }
  require_internal(trace_faces(g).genus == 0, "planar generator left the sphere");
  return g;
}

} // namespace psidet
