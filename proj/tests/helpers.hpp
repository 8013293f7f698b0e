#pragma once

// Shared fixture builders and samplers for the test binaries.

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "stg/graph.hpp"
#include "stg/group.hpp"
#include "stg/groupoid.hpp"
#include "stg/kgraph.hpp"

namespace stgtest {

inline stg::Graph make_graph(
    std::vector<std::string> vertices,
    std::vector<std::tuple<std::string, std::string, std::string>> edges,
    std::set<std::string> infinite_emitters = {},
    std::vector<stg::Ray> rays = {}) {
  stg::Graph g;
  g.vertices = std::move(vertices);
  for (auto& [id, src, rng] : edges) g.edges.push_back({id, src, rng});
  g.infinite_emitters = std::move(infinite_emitters);
  g.rays = std::move(rays);
  g.validate();
  return g;
}

inline stg::Graph loop_graph() { return make_graph({"v"}, {{"e", "v", "v"}}); }

inline stg::Graph sink_graph() { return make_graph({"u", "v"}, {{"e", "u", "v"}}); }

// Random connected-ish multigraph: up to max_v vertices, each ordered pair
// carries 0..2 parallel edges. Not guaranteed connected; callers that need
// connectivity filter themselves.
inline stg::Graph random_graph(std::mt19937& rng, int max_v, double edge_p = 0.3) {
  std::uniform_int_distribution<int> nv(1, max_v);
  int n = nv(rng);
  std::vector<std::string> verts;
  for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  std::bernoulli_distribution put(edge_p);
  std::bernoulli_distribution dup(edge_p / 2);
  int eid = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int count = put(rng) ? (dup(rng) ? 2 : 1) : 0;
      for (int c = 0; c < count; ++c)
        edges.emplace_back("e" + std::to_string(eid++), verts[i], verts[j]);
    }
  return make_graph(verts, edges);
}

// All multigraphs on the given vertex count with <= 2 parallel edges per
// ordered pair, streamed through a callback. 3^(n^2) graphs.
template <class Fn>
void for_each_multigraph(int n, Fn&& fn) {
  std::vector<std::string> verts;
  for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
  int pairs = n * n;
  std::vector<int> mult(pairs, 0);
  while (true) {
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    int eid = 0;
    for (int p = 0; p < pairs; ++p)
      for (int c = 0; c < mult[p]; ++c)
        edges.emplace_back("e" + std::to_string(eid++), verts[p / n], verts[p % n]);
    fn(make_graph(verts, edges));
    int p = 0;
    for (; p < pairs; ++p) {
      if (++mult[p] <= 2) break;
      mult[p] = 0;
    }
    if (p == pairs) return;
  }
}

inline bool is_connected_undirected(const stg::Graph& g) {
  if (g.vertices.empty()) return true;
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& e : g.edges) {
    adj[e.src].insert(e.rng);
    adj[e.rng].insert(e.src);
  }
  std::set<std::string> seen{g.vertices.front()};
  std::vector<std::string> stack{g.vertices.front()};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == g.vertices.size();
}

// The grading group realised as a one-unit groupoid.
inline stg::Groupoid group_as_groupoid(const stg::AbelianGroup& grp) {
  stg::Groupoid g;
  g.group = grp;
  std::string unit = "m" + grp.show(grp.identity());
  for (const auto& a : grp.elements()) {
    std::string x = "m" + grp.show(a);
    g.morphisms.push_back(x);
    g.dom[x] = unit;
    g.cod[x] = unit;
    g.inv[x] = "m" + grp.show(grp.neg(a));
    g.deg[x] = a;
    for (const auto& b : grp.elements())
      g.comp[{x, "m" + grp.show(b)}] = "m" + grp.show(grp.add(a, b));
  }
  std::sort(g.morphisms.begin(), g.morphisms.end());
  g.units.insert(unit);
  return g;
}

// Units-only groupoid on n objects, every degree the identity.
inline stg::Groupoid discrete_groupoid(const stg::AbelianGroup& grp, int n) {
  stg::Groupoid g;
  g.group = grp;
  for (int i = 0; i < n; ++i) {
    std::string u = "u" + std::to_string(i);
    g.morphisms.push_back(u);
    g.units.insert(u);
    g.dom[u] = u;
    g.cod[u] = u;
    g.inv[u] = u;
    g.deg[u] = grp.identity();
    g.comp[{u, u}] = u;
  }
  return g;
}

// Transitive groupoid on `objs` objects with cyclic isotropy generated by
// one degree: morphisms (i, j, t) = "g<i>_<j>_<t>" for t in the isotropy
// subgroup generated by iso_gen, with object degrees obj_deg[i] twisting the
// grading: deg(i,j,t) = obj_deg[i] + t - obj_deg[j].
inline stg::Groupoid transitive_groupoid(const stg::AbelianGroup& grp, int objs,
                                         const stg::GroupElem& iso_gen,
                                         const std::vector<stg::GroupElem>& obj_deg,
                                         const std::string& prefix = "g") {
  std::vector<stg::GroupElem> iso;
  stg::GroupElem t = grp.identity();
  do {
    iso.push_back(t);
    t = grp.reduce(grp.add(t, iso_gen));
  } while (!(t == grp.identity()));
  auto name = [&](int i, int j, const stg::GroupElem& s) {
    return prefix + std::to_string(i) + "_" + std::to_string(j) + "_" + grp.show(s);
  };
  stg::Groupoid g;
  g.group = grp;
  for (int i = 0; i < objs; ++i)
    for (int j = 0; j < objs; ++j)
      for (const auto& s : iso) {
        std::string x = name(i, j, s);
        g.morphisms.push_back(x);
        g.dom[x] = name(j, j, grp.identity());
        g.cod[x] = name(i, i, grp.identity());
        g.inv[x] = name(j, i, grp.neg(s));
        g.deg[x] = grp.reduce(grp.add(grp.sub(obj_deg[i], obj_deg[j]), s));
      }
  for (int i = 0; i < objs; ++i) g.units.insert(name(i, i, grp.identity()));
  for (int i = 0; i < objs; ++i)
    for (int j = 0; j < objs; ++j)
      for (int l = 0; l < objs; ++l)
        for (const auto& s : iso)
          for (const auto& r : iso)
            g.comp[{name(i, j, s), name(j, l, r)}] =
                name(i, l, grp.reduce(grp.add(s, r)));
  std::sort(g.morphisms.begin(), g.morphisms.end());
  return g;
}

inline stg::Groupoid disjoint_union(const stg::Groupoid& a, const stg::Groupoid& b) {
  stg::Groupoid g = a;
  g.morphisms.insert(g.morphisms.end(), b.morphisms.begin(), b.morphisms.end());
  std::sort(g.morphisms.begin(), g.morphisms.end());
  g.units.insert(b.units.begin(), b.units.end());
  g.dom.insert(b.dom.begin(), b.dom.end());
  g.cod.insert(b.cod.begin(), b.cod.end());
  g.inv.insert(b.inv.begin(), b.inv.end());
  g.deg.insert(b.deg.begin(), b.deg.end());
  g.comp.insert(b.comp.begin(), b.comp.end());
  return g;
}

// Random valid graded groupoid with <= max_morphisms morphisms: a disjoint
// union of transitive components with cyclic isotropy and twisted degrees.
inline stg::Groupoid random_groupoid(std::mt19937& rng, const stg::AbelianGroup& grp,
                                     int max_morphisms) {
  auto elems = grp.elements();
  std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
  stg::Groupoid g;
  g.group = grp;
  int used = 0, comp = 0;
  while (true) {
    stg::GroupElem iso_gen = elems[pick(rng)];
    long long iso_order = std::max<long long>(1, grp.elem_order(iso_gen));
    std::uniform_int_distribution<int> no(1, 2);
    int objs = no(rng);
    long long size = static_cast<long long>(objs) * objs * iso_order;
    if (used + size > max_morphisms) break;
    std::vector<stg::GroupElem> obj_deg;
    for (int i = 0; i < objs; ++i) obj_deg.push_back(elems[pick(rng)]);
    stg::Groupoid part = transitive_groupoid(grp, objs, iso_gen, obj_deg,
                                             "c" + std::to_string(comp++) + "_");
    g = g.morphisms.empty() ? part : disjoint_union(g, part);
    used += static_cast<int>(size);
    std::bernoulli_distribution more(0.5);
    if (!more(rng)) break;
  }
  if (g.morphisms.empty()) g = discrete_groupoid(grp, 1);
  return g;
}

// Two-vertex 2-graph: one loop of color 1 at each vertex, color-0 edges
// swapping the vertices, squares forced by the endpoints.
inline stg::KGraph two_vertex_2graph() {
  stg::KGraph g;
  g.k = 2;
  g.vertices = {"u", "v"};
  g.edges = {{"e", "u", "v", 0}, {"g", "v", "u", 0}, {"f", "u", "u", 1},
             {"h", "v", "v", 1}};
  g.squares[{0, 1}][{"e", "h"}] = {"f", "e"};
  g.squares[{0, 1}][{"g", "f"}] = {"h", "g"};
  stg::KGraphReport rep = validate_kgraph(g);
  if (!rep.valid) throw std::logic_error("fixture invalid: " + rep.violation);
  return g;
}

// Random valid 2-graph on <= max_v vertices. Edge multiplicities are
// rejection-sampled until the two color adjacency matrices commute entrywise
// as counts, which makes the per-endpoint square bijections exist; they are
// then paired lexicographically. Falls back to the two-vertex fixture.
inline stg::KGraph random_2graph(std::mt19937& rng, int max_v,
                                 bool no_sources = false) {
  std::uniform_int_distribution<int> nv(1, max_v);
  std::uniform_int_distribution<int> mult(0, 2);
  for (int attempt = 0; attempt < 400; ++attempt) {
    int n = nv(rng);
    std::vector<std::vector<int>> m0(n, std::vector<int>(n, 0)), m1 = m0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m0[i][j] = mult(rng);
        m1[i][j] = mult(rng);
      }
    if (no_sources) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        int o0 = 0, o1 = 0;
        for (int j = 0; j < n; ++j) {
          o0 += m0[i][j];
          o1 += m1[i][j];
        }
        ok = o0 > 0 && o1 > 0;
      }
      if (!ok) continue;
    }
    bool commute = true;
    for (int i = 0; i < n && commute; ++i)
      for (int j = 0; j < n && commute; ++j) {
        int a = 0, b = 0;
        for (int l = 0; l < n; ++l) {
          a += m0[i][l] * m1[l][j];
          b += m1[i][l] * m0[l][j];
        }
        commute = a == b;
      }
    if (!commute) continue;
    stg::KGraph g;
    g.k = 2;
    for (int i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
    int eid = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int c = 0; c < m0[i][j]; ++c)
          g.edges.push_back({"a" + std::to_string(eid++), g.vertices[i],
                             g.vertices[j], 0});
        for (int c = 0; c < m1[i][j]; ++c)
          g.edges.push_back({"b" + std::to_string(eid++), g.vertices[i],
                             g.vertices[j], 1});
      }
    g.index();
    // per (source, target): 0-then-1 words paired with 1-then-0 words
    std::map<std::pair<std::string, std::string>,
             std::vector<std::pair<std::string, std::string>>>
        fwd, bwd;
    for (const auto& e : g.edges) {
      if (e.color == 0)
        for (const stg::KEdge* f : g.out_edges(e.rng, 1))
          fwd[{e.src, f->rng}].emplace_back(e.id, f->id);
      else
        for (const stg::KEdge* f : g.out_edges(e.rng, 0))
          bwd[{e.src, f->rng}].emplace_back(e.id, f->id);
    }
    for (auto& [key, words] : fwd) {
      auto& others = bwd[key];
      if (words.size() != others.size())
        throw std::logic_error("commuting counts out of step");
      std::sort(words.begin(), words.end());
      std::sort(others.begin(), others.end());
      for (size_t t = 0; t < words.size(); ++t)
        g.squares[{0, 1}][words[t]] = others[t];
    }
    stg::KGraphReport rep = validate_kgraph(g);
    if (!rep.valid) throw std::logic_error("sampler invalid: " + rep.violation);
    return g;
  }
  return two_vertex_2graph();
}

}  // namespace stgtest
