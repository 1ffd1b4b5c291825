/*
 * Feynman graph model: connected multigraphs with oriented internal edges,
 * optional external legs carrying rational momentum vectors, and an optional
 * rotation system (cyclic order of internal half-edges at each vertex).
 *
 * File format (JSON):
 *   {
 *     "name": "wheel3",
 *     "vertices": ["o","a","b","c"],
 *     "edges": [{"id":"t1","src":"o","dst":"a"}, ...],
 *     "external": [{"id":"p1","at":"a","momentum":["1","0"]}, ...],
 *     "rotation": {"o": [["t1","src"],["t2","src"],["t3","src"]], ...}
 *   }
 * "external" and "rotation" are optional; momenta are optional per leg and
 * may be integers or strings like "-3/2".  Edge ids double as polynomial
 * variable names downstream, so they must be unique across internal and
 * external edges.
 */
#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "psidet/errors.hpp"
#include "psidet/numeric.hpp"

namespace psidet {

enum class End { src, dst };

struct Dart {
  size_t edge;
  End end;
  bool operator==(const Dart& o) const { return edge == o.edge && end == o.end; }
  bool operator<(const Dart& o) const {
    return edge != o.edge ? edge < o.edge : static_cast<int>(end) < static_cast<int>(o.end);
  }
};

struct InternalEdge {
  std::string id;
  size_t src;
  size_t dst;
};

struct ExternalEdge {
  std::string id;
  size_t at;
  std::vector<Rat> momentum; // empty if not given
};

class FeynmanGraph {
public:
  std::string name;
  std::vector<std::string> vertices;
  std::vector<InternalEdge> edges;
  std::vector<ExternalEdge> externals;
  bool has_rotation = false;
  std::vector<std::vector<Dart>> rotation; // indexed by vertex, cyclic order

  size_t num_vertices() const { return vertices.size(); }
  size_t n() const { return edges.size(); }

  // first Betti number; valid once connectivity has been checked
  size_t loop_number() const {
    require_internal(n() + 1 >= num_vertices(), "loop_number on disconnected graph");
    return n() - num_vertices() + 1;
  }

  bool is_looping(size_t e) const { return edges[e].src == edges[e].dst; }

  bool has_looping_edges() const {
    for (size_t e = 0; e < n(); ++e)
      if (is_looping(e)) return true;
    return false;
  }

  bool has_multiple_edges() const {
    std::set<std::pair<size_t, size_t>> seen;
    for (const auto& e : edges) {
      auto key = std::minmax(e.src, e.dst);
      if (!seen.insert({key.first, key.second}).second) return true;
    }
    return false;
  }

  size_t vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == id) return i;
    throw_input("unknown vertex id '" + id + "'");
  }

  size_t edge_index(const std::string& id) const {
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i].id == id) return i;
    throw_input("unknown edge id '" + id + "'");
  }

  std::vector<std::string> edge_variables() const {
    std::vector<std::string> v;
    v.reserve(n());
    for (const auto& e : edges) v.push_back(e.id);
    return v;
  }

  size_t degree(size_t v) const {
    size_t d = 0;
    for (const auto& e : edges) {
      if (e.src == v) ++d;
      if (e.dst == v) ++d;
    }
    return d;
  }

  // cyclic position of a dart within a vertex rotation
  size_t rotation_slot(size_t v, const Dart& d) const {
    const auto& r = rotation[v];
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] == d) return i;
    throw_internal("dart not found in rotation");
  }

  std::string fresh_vertex_id(const std::string& base) const {
    std::string id = base;
    int k = 2;
    while (std::find(vertices.begin(), vertices.end(), id) != vertices.end())
      id = base + std::to_string(k++);
    return id;
  }

  std::string fresh_edge_id(const std::string& base) const {
    auto taken = [this](const std::string& id) {
      for (const auto& e : edges)
        if (e.id == id) return true;
      for (const auto& e : externals)
        if (e.id == id) return true;
      return false;
    };
    std::string id = base;
    int k = 2;
    while (taken(id)) id = base + std::to_string(k++);
    return id;
  }
};

// ---------------------------------------------------------------------------
// validation

namespace detail {

class DSU {
public:
  explicit DSU(size_t n) : p_(n) {
    for (size_t i = 0; i < n; ++i) p_[i] = i;
  }
  size_t find(size_t x) {
    while (p_[x] != x) x = p_[x] = p_[p_[x]];
    return x;
  }
  bool unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p_[a] = b;
    return true;
  }
  size_t component_count(size_t n) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i)
      if (find(i) == i) ++c;
    return c;
  }

private:
  std::vector<size_t> p_;
};

} // namespace detail

inline bool graph_is_connected(const FeynmanGraph& g) {
  if (g.num_vertices() == 0) return false;
  detail::DSU dsu(g.num_vertices());
  for (const auto& e : g.edges) dsu.unite(e.src, e.dst);
  return dsu.component_count(g.num_vertices()) == 1;
}

// Structural checks beyond what parsing enforces; throws input errors.
inline void validate_graph(const FeynmanGraph& g) {
  require_input(!g.vertices.empty(), "graph '" + g.name + "': no vertices");
  {
    std::set<std::string> seen;
    for (const auto& v : g.vertices)
      require_input(seen.insert(v).second, "duplicate vertex id '" + v + "'");
  }
  {
    std::set<std::string> seen;
    for (const auto& e : g.edges)
      require_input(seen.insert(e.id).second, "duplicate edge id '" + e.id + "'");
    for (const auto& e : g.externals)
      require_input(seen.insert(e.id).second, "duplicate edge id '" + e.id + "'");
  }
  for (const auto& e : g.edges)
    require_input(e.src < g.num_vertices() && e.dst < g.num_vertices(),
                  "edge '" + e.id + "': endpoint out of range");
  for (const auto& e : g.externals)
    require_input(e.at < g.num_vertices(), "external edge '" + e.id + "': endpoint out of range");
  {
    size_t dim = 0;
    for (const auto& e : g.externals) {
      if (e.momentum.empty()) continue;
      if (dim == 0) dim = e.momentum.size();
      require_input(e.momentum.size() == dim,
                    "external edge '" + e.id + "': momentum dimension mismatch");
    }
  }
  require_input(graph_is_connected(g), "graph '" + g.name + "' is not connected");
  if (g.has_rotation) {
    require_input(g.rotation.size() == g.num_vertices(), "rotation: wrong vertex count");
    std::set<std::pair<size_t, int>> seen;
    for (size_t v = 0; v < g.num_vertices(); ++v) {
      for (const Dart& d : g.rotation[v]) {
        require_input(d.edge < g.n(), "rotation: unknown edge index");
        const InternalEdge& e = g.edges[d.edge];
        size_t expect = (d.end == End::src) ? e.src : e.dst;
        require_input(expect == v, "rotation: dart for edge '" + e.id + "' listed at wrong vertex");
        require_input(seen.insert({d.edge, static_cast<int>(d.end)}).second,
                      "rotation: dart for edge '" + e.id + "' listed twice");
      }
    }
    require_input(seen.size() == 2 * g.n(), "rotation: missing half-edges");
  }
}

// ---------------------------------------------------------------------------
// JSON I/O

inline Rat parse_momentum_entry(const nlohmann::json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw_input(ctx + ": momentum entries must be integers or rational strings");
}

inline FeynmanGraph graph_from_json(const nlohmann::json& j) {
  require_input(j.is_object(), "graph document must be a JSON object");
  FeynmanGraph g;
  g.name = j.value("name", std::string("unnamed"));
  require_input(j.contains("vertices") && j.at("vertices").is_array(),
                "graph needs a 'vertices' array");
  std::map<std::string, size_t> vidx;
  for (const auto& v : j.at("vertices")) {
    require_input(v.is_string(), "vertex ids must be strings");
    std::string id = v.get<std::string>();
    require_input(!vidx.count(id), "duplicate vertex id '" + id + "'");
    vidx[id] = g.vertices.size();
    g.vertices.push_back(id);
  }
  require_input(j.contains("edges") && j.at("edges").is_array(), "graph needs an 'edges' array");
  std::map<std::string, size_t> eidx;
  for (const auto& e : j.at("edges")) {
    require_input(e.is_object() && e.contains("id") && e.contains("src") && e.contains("dst"),
                  "each edge needs id/src/dst");
    InternalEdge ie;
    ie.id = e.at("id").get<std::string>();
    std::string s = e.at("src").get<std::string>(), d = e.at("dst").get<std::string>();
    require_input(vidx.count(s), "edge '" + ie.id + "': unknown src vertex '" + s + "'");
    require_input(vidx.count(d), "edge '" + ie.id + "': unknown dst vertex '" + d + "'");
    ie.src = vidx[s];
    ie.dst = vidx[d];
    require_input(!eidx.count(ie.id), "duplicate edge id '" + ie.id + "'");
    eidx[ie.id] = g.edges.size();
    g.edges.push_back(ie);
  }
  if (j.contains("external")) {
    require_input(j.at("external").is_array(), "'external' must be an array");
    for (const auto& e : j.at("external")) {
      require_input(e.is_object() && e.contains("id") && e.contains("at"),
                    "each external edge needs id/at");
      ExternalEdge xe;
      xe.id = e.at("id").get<std::string>();
      std::string at = e.at("at").get<std::string>();
      require_input(vidx.count(at), "external edge '" + xe.id + "': unknown vertex '" + at + "'");
      xe.at = vidx[at];
      if (e.contains("momentum")) {
        require_input(e.at("momentum").is_array(), "momentum must be an array");
        for (const auto& c : e.at("momentum"))
          xe.momentum.push_back(parse_momentum_entry(c, "external edge '" + xe.id + "'"));
      }
      g.externals.push_back(xe);
    }
  }
  if (j.contains("rotation")) {
    require_input(j.at("rotation").is_object(), "'rotation' must be an object");
    g.has_rotation = true;
    g.rotation.assign(g.num_vertices(), {});
    for (const auto& [vid, slots] : j.at("rotation").items()) {
      require_input(vidx.count(vid), "rotation: unknown vertex '" + vid + "'");
      require_input(slots.is_array(), "rotation at '" + vid + "' must be an array");
      for (const auto& s : slots) {
        require_input(s.is_array() && s.size() == 2, "rotation slots are [edge id, \"src\"|\"dst\"]");
        std::string eid = s.at(0).get<std::string>();
        std::string tag = s.at(1).get<std::string>();
        require_input(eidx.count(eid),
                      "rotation at '" + vid + "': unknown internal edge '" + eid + "'");
        require_input(tag == "src" || tag == "dst", "rotation end tag must be src or dst");
        g.rotation[vidx[vid]].push_back({eidx[eid], tag == "src" ? End::src : End::dst});
      }
    }
  }
  validate_graph(g);
  return g;
}

inline FeynmanGraph parse_graph_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw_input(std::string("JSON parse error: ") + e.what());
  }
  return graph_from_json(j);
}

inline FeynmanGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  require_input(in.good(), "cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_text(ss.str());
}

inline nlohmann::json graph_to_json(const FeynmanGraph& g) {
  nlohmann::json j;
  j["name"] = g.name;
  j["vertices"] = g.vertices;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"id", e.id}, {"src", g.vertices[e.src]}, {"dst", g.vertices[e.dst]}});
  if (!g.externals.empty()) {
    j["external"] = nlohmann::json::array();
    for (const auto& e : g.externals) {
      nlohmann::json x = {{"id", e.id}, {"at", g.vertices[e.at]}};
      if (!e.momentum.empty()) {
        nlohmann::json m = nlohmann::json::array();
        for (const auto& c : e.momentum) m.push_back(to_string(c));
        x["momentum"] = m;
      }
      j["external"].push_back(x);
    }
  }
  if (g.has_rotation) {
    nlohmann::json r = nlohmann::json::object();
    for (size_t v = 0; v < g.num_vertices(); ++v) {
      nlohmann::json slots = nlohmann::json::array();
      for (const Dart& d : g.rotation[v])
        slots.push_back({g.edges[d.edge].id, d.end == End::src ? "src" : "dst"});
      r[g.vertices[v]] = slots;
    }
    j["rotation"] = r;
  }
  return j;
}

} // namespace psidet
