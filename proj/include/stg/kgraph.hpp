#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stg/criteria.hpp"
#include "stg/graph.hpp"
#include "stg/semilinear.hpp"

namespace stg {

struct KEdge {
  std::string id;
  std::string src;
  std::string rng;
  int color = 0;
};

// k-colored skeleton plus commuting squares. For each color pair i < j the
// square table maps every composable (color-i edge, color-j edge) word to the
// unique (color-j edge, color-i edge) word with the same outer endpoints.
struct KGraph {
  KGraph() = default;
  // Edge lookups point into this object's own edge storage, so copies and
  // moves must rebuild them.
  KGraph(const KGraph& o) { assign(o); }
  KGraph(KGraph&& o) noexcept { assign(o); }
  KGraph& operator=(const KGraph& o) {
    if (this != &o) assign(o);
    return *this;
  }
  KGraph& operator=(KGraph&& o) noexcept {
    if (this != &o) assign(o);
    return *this;
  }

  int k = 1;
  std::vector<std::string> vertices;
  std::vector<KEdge> edges;
  std::map<std::pair<int, int>,
           std::map<std::pair<std::string, std::string>,
                    std::pair<std::string, std::string>>>
      squares;

  void index();  // builds lookups; called by validate_kgraph
  const KEdge& edge(const std::string& id) const;
  const std::vector<const KEdge*>& out_edges(const std::string& v, int color) const;
  bool has_vertex(const std::string& v) const { return vset_.count(v) > 0; }

 private:
  void assign(const KGraph& o);

  std::set<std::string> vset_;
  std::map<std::string, size_t> eidx_;
  std::map<std::pair<std::string, int>, std::vector<const KEdge*>> out_;
  std::vector<const KEdge*> none_;
};

struct KGraphReport {
  bool valid = true;
  std::string violation;
};

// Square totality and bijectivity; for k >= 3 also the triple-color
// coherence of the induced reorderings.
KGraphReport validate_kgraph(KGraph& g);

// Canonical representative: edge word sorted by color via the squares.
struct KPath {
  std::string start;
  std::vector<std::string> word;
  bool operator==(const KPath& o) const = default;
  auto operator<=>(const KPath& o) const = default;
};

KPath make_kpath(const KGraph& g, const std::string& start,
                 std::vector<std::string> word);
std::vector<long long> kpath_degree(const KGraph& g, const KPath& p);
std::string kpath_range(const KGraph& g, const KPath& p);
KPath compose_kpaths(const KGraph& g, const KPath& a, const KPath& b);

// Unique factorisation p = first . second with degree(first) = m.
std::pair<KPath, KPath> split_kpath(const KGraph& g, const KPath& p,
                                    const std::vector<long long>& m);
// The factor p(m, n) of degree n - m.
KPath segment(const KGraph& g, const KPath& p, const std::vector<long long>& m,
              const std::vector<long long>& n);

// All paths of the given degree starting at v, lexicographic in the
// canonical word.
std::vector<KPath> paths_of_degree(const KGraph& g, const std::string& v,
                                   const std::vector<long long>& m);

// Pairs (rho, tau) with lambda.rho = mu.tau of degree d(lambda) v d(mu).
std::vector<std::pair<KPath, KPath>> lambda_min(const KGraph& g, const KPath& lambda,
                                                const KPath& mu);
std::vector<KPath> mce(const KGraph& g, const KPath& lambda, const KPath& mu);

bool is_exhaustive(const KGraph& g, const std::string& v,
                   const std::vector<KPath>& e);
std::vector<KPath> ext_paths(const KGraph& g, const KPath& lambda,
                             const std::vector<KPath>& e);
std::vector<KPath> edge_set(const KGraph& g, const std::vector<KPath>& e);

// S_m = vertices receiving a path of degree m, folded grid-periodically.
GridPeriodicFamily source_sets(const KGraph& g);

// Requires no sources; fails exactly when the phase product graph has a
// reachable all-bad lasso whose cycle uses every color.
Verdict condition_y_kgraph(const KGraph& g);

Verdict strongly_zk_graded(const KGraph& g);

// 1-graph view of a finite directed graph (no annotations, no rays).
KGraph kgraph_from_graph(const Graph& g);

}  // namespace stg
