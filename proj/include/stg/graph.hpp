#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stg {

// An infinite tail attached to the core: implicit vertices rho(0), rho(1), ...
// with one edge rho(i) -> rho(i+1). Each entry vertex contributes exactly one
// edge from that core vertex to rho(0).
struct Ray {
  std::string id;
  std::set<std::string> entries;
};

struct Edge {
  std::string id;
  std::string src;
  std::string rng;
};

// Finite directed multigraph with infinite-emitter annotations and rays.
// Immutable after validate(); everything downstream assumes a validated graph.
class Graph {
 public:
  Graph() = default;
  // The adjacency indexes point into this object's own edge storage, so
  // copies and moves must rebuild them.
  Graph(const Graph& o) { assign(o); }
  Graph(Graph&& o) noexcept { assign(o); }
  Graph& operator=(const Graph& o) {
    if (this != &o) assign(o);
    return *this;
  }
  Graph& operator=(Graph&& o) noexcept {
    if (this != &o) assign(o);
    return *this;
  }

  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::set<std::string> infinite_emitters;
  std::vector<Ray> rays;

  // Throws ValidationError naming the offending item. Sorts edges by id so
  // enumerations are deterministic, and builds adjacency indexes.
  void validate();

  bool has_vertex(const std::string& v) const { return vertex_set_.count(v) > 0; }
  const Edge& edge(const std::string& id) const;
  // Edges with the given source / range, in edge-id order.
  const std::vector<const Edge*>& out_edges(const std::string& v) const;
  const std::vector<const Edge*>& in_edges(const std::string& v) const;

 private:
  void assign(const Graph& o);

  std::set<std::string> vertex_set_;
  std::map<std::string, size_t> edge_index_;
  std::map<std::string, std::vector<const Edge*>> out_, in_;
  std::vector<const Edge*> none_;
};

// Core path: start vertex plus a composable edge-id sequence.
struct Path {
  std::string start;
  std::vector<std::string> edges;

  size_t length() const { return edges.size(); }
  std::string range(const Graph& g) const;
  bool operator==(const Path& o) const = default;
  auto operator<=>(const Path& o) const = default;
  std::string show() const;
};

Path make_path(const Graph& g, const std::string& start,
               const std::vector<std::string>& edge_ids);

struct VertexFlags {
  bool sink = false;
  bool infinite_emitter = false;
  bool singular = false;
  bool isolated = false;
};

struct VertexClassification {
  std::map<std::string, VertexFlags> per_vertex;
  bool row_finite = true;
  bool has_sink = false;
  bool has_isolated = false;
};

// Ray vertices count: a ray entry vertex emits its entry edge, and ray heads
// receive those edges, so vertices feeding rays are not sinks.
VertexClassification classify_vertices(const Graph& g);

// Core vertices lying on a closed core path of length >= 1.
std::set<std::string> cycle_vertices(const Graph& g);

// sigma^n: drops the first n edges; throws DomainError if n > |p|.
Path shift(const Graph& g, const Path& p, size_t n);

// All core paths of length n with range v, in lexicographic edge-id order.
// Throws ResourceError past the configured enumeration cap.
std::vector<Path> paths_into(const Graph& g, const std::string& v, size_t n);

// All core paths of length n with source v, same ordering and cap.
std::vector<Path> paths_from(const Graph& g, const std::string& v, size_t n);

}  // namespace stg
