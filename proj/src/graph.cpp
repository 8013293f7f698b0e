#include "stg/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "stg/errors.hpp"

namespace stg {

long long max_enumeration_size() {
  if (const char* s = std::getenv("STG_MAX_ENUM")) return std::atoll(s);
  return 2'000'000;
}

long long max_truncation_depth() {
  if (const char* s = std::getenv("STG_MAX_DEPTH")) return std::atoll(s);
  return 64;
}

void Graph::assign(const Graph& o) {
  vertices = o.vertices;
  edges = o.edges;
  infinite_emitters = o.infinite_emitters;
  rays = o.rays;
  vertex_set_ = o.vertex_set_;
  edge_index_ = o.edge_index_;
  out_.clear();
  in_.clear();
  // rebuild adjacency against our own edge storage
  for (const auto& [src, list] : o.out_) {
    auto& mine = out_[src];
    for (const Edge* e : list) mine.push_back(&edges[edge_index_.at(e->id)]);
  }
  for (const auto& [rng, list] : o.in_) {
    auto& mine = in_[rng];
    for (const Edge* e : list) mine.push_back(&edges[edge_index_.at(e->id)]);
  }
}

void Graph::validate() {
  vertex_set_.clear();
  edge_index_.clear();
  out_.clear();
  in_.clear();
  std::set<std::string> names;
  for (const auto& v : vertices) {
    if (!vertex_set_.insert(v).second)
      throw ValidationError("duplicate vertex '" + v + "'");
    if (!names.insert(v).second)
      throw ValidationError("identifier clash on '" + v + "'");
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const auto& e : edges) {
    if (!names.insert(e.id).second)
      throw ValidationError("identifier clash on edge '" + e.id + "'");
    if (!vertex_set_.count(e.src))
      throw ValidationError("edge '" + e.id + "' has undeclared src '" + e.src + "'");
    if (!vertex_set_.count(e.rng))
      throw ValidationError("edge '" + e.id + "' has undeclared rng '" + e.rng + "'");
  }
  for (const auto& v : infinite_emitters)
    if (!vertex_set_.count(v))
      throw ValidationError("infinite emitter '" + v + "' is not a vertex");
  for (const auto& r : rays) {
    if (!names.insert(r.id).second)
      throw ValidationError("identifier clash on ray '" + r.id + "'");
    if (r.entries.empty())
      throw ValidationError("ray '" + r.id + "' has no entries");
    for (const auto& w : r.entries)
      if (!vertex_set_.count(w))
        throw ValidationError("ray '" + r.id + "' entry '" + w + "' is not a core vertex");
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    edge_index_[edges[i].id] = i;
    out_[edges[i].src].push_back(&edges[i]);
    in_[edges[i].rng].push_back(&edges[i]);
  }
}

const Edge& Graph::edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw DomainError("unknown edge '" + id + "'");
  return edges[it->second];
}

const std::vector<const Edge*>& Graph::out_edges(const std::string& v) const {
  auto it = out_.find(v);
  return it == out_.end() ? none_ : it->second;
}

const std::vector<const Edge*>& Graph::in_edges(const std::string& v) const {
  auto it = in_.find(v);
  return it == in_.end() ? none_ : it->second;
}

std::string Path::range(const Graph& g) const {
  return edges.empty() ? start : g.edge(edges.back()).rng;
}

std::string Path::show() const {
  if (edges.empty()) return start;
  std::string s;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) s += '.';
    s += edges[i];
  }
  return s;
}

Path make_path(const Graph& g, const std::string& start,
               const std::vector<std::string>& edge_ids) {
  if (!g.has_vertex(start)) throw DomainError("unknown vertex '" + start + "'");
  Path p{start, {}};
  std::string at = start;
  for (const auto& id : edge_ids) {
    const Edge& e = g.edge(id);
    if (e.src != at)
      throw DomainError("edge '" + id + "' does not continue the path at '" + at + "'");
    p.edges.push_back(id);
    at = e.rng;
  }
  return p;
}

VertexClassification classify_vertices(const Graph& g) {
  VertexClassification c;
  std::set<std::string> ray_feeders;
  for (const auto& r : g.rays)
    for (const auto& w : r.entries) ray_feeders.insert(w);
  for (const auto& v : g.vertices) {
    VertexFlags f;
    bool emits = !g.out_edges(v).empty() || g.infinite_emitters.count(v) > 0 ||
                 ray_feeders.count(v) > 0;
    bool receives = !g.in_edges(v).empty();
    f.sink = !emits;
    f.infinite_emitter = g.infinite_emitters.count(v) > 0;
    f.singular = f.sink || f.infinite_emitter;
    f.isolated = f.sink && !receives;
    c.has_sink |= f.sink;
    c.has_isolated |= f.isolated;
    c.per_vertex[v] = f;
  }
  c.row_finite = g.infinite_emitters.empty();
  return c;
}

std::set<std::string> cycle_vertices(const Graph& g) {
  // a vertex is on a cycle iff it reaches itself through >= 1 edge
  std::set<std::string> out;
  for (const auto& v : g.vertices) {
    std::set<std::string> seen;
    std::vector<std::string> stack;
    for (const Edge* e : g.out_edges(v))
      if (seen.insert(e->rng).second) stack.push_back(e->rng);
    bool found = seen.count(v) > 0;
    while (!found && !stack.empty()) {
      std::string w = stack.back();
      stack.pop_back();
      for (const Edge* e : g.out_edges(w)) {
        if (e->rng == v) found = true;
        if (seen.insert(e->rng).second) stack.push_back(e->rng);
      }
    }
    if (found) out.insert(v);
  }
  return out;
}

Path shift(const Graph& g, const Path& p, size_t n) {
  if (n > p.length()) throw DomainError("shift amount exceeds path length");
  if (n == 0) return p;
  Path q;
  q.start = g.edge(p.edges[n - 1]).rng;
  q.edges.assign(p.edges.begin() + n, p.edges.end());
  return q;
}

namespace {

std::vector<Path> extend_paths(const Graph& g, std::vector<Path> cur, size_t n,
                               bool forward) {
  const long long cap = max_enumeration_size();
  for (size_t step = 0; step < n; ++step) {
    std::vector<Path> next;
    for (const auto& p : cur) {
      if (forward) {
        for (const Edge* e : g.out_edges(p.range(g))) {
          next.push_back(p);
          next.back().edges.push_back(e->id);
        }
      } else {
        for (const Edge* e : g.in_edges(p.start)) {
          Path q;
          q.start = e->src;
          q.edges.push_back(e->id);
          q.edges.insert(q.edges.end(), p.edges.begin(), p.edges.end());
          next.push_back(std::move(q));
        }
      }
      if (static_cast<long long>(next.size()) > cap)
        throw ResourceError("path enumeration exceeds cap");
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

}  // namespace

std::vector<Path> paths_into(const Graph& g, const std::string& v, size_t n) {
  if (!g.has_vertex(v)) throw DomainError("unknown vertex '" + v + "'");
  return extend_paths(g, {Path{v, {}}}, n, /*forward=*/false);
}

std::vector<Path> paths_from(const Graph& g, const std::string& v, size_t n) {
  if (!g.has_vertex(v)) throw DomainError("unknown vertex '" + v + "'");
  return extend_paths(g, {Path{v, {}}}, n, /*forward=*/true);
}

}  // namespace stg
