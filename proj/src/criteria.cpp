#include "stg/criteria.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "stg/errors.hpp"

namespace stg {

Verdict yes_verdict() {
  Verdict v;
  v.yes = true;
  return v;
}

Verdict no_verdict(Witness w) {
  Verdict v;
  v.yes = false;
  v.witness = std::move(w);
  return v;
}

std::string Verdict::describe_witness() const {
  if (!witness) return "";
  std::ostringstream os;
  std::visit(
      [&os](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, SinkWitness>)
          os << "sink " << w.vertex;
        else if constexpr (std::is_same_v<T, InfiniteEmitterWitness>)
          os << "infinite-emitter " << w.vertex;
        else if constexpr (std::is_same_v<T, IsolatedWitness>)
          os << "isolated " << w.vertex;
        else if constexpr (std::is_same_v<T, SingularReceivesWitness>)
          os << "singular " << w.vertex << " receives no path of length " << w.length;
        else if constexpr (std::is_same_v<T, ConditionYWitness>)
          os << "ray " << w.ray << " k=" << w.k << " prefix=" << w.prefix.show()
             << " (" << w.explanation << ")";
        else if constexpr (std::is_same_v<T, SourceWitness>)
          os << "source " << w.vertex << " color " << w.color;
        else if constexpr (std::is_same_v<T, LassoWitness>) {
          os << "bad lasso at m=(";
          for (size_t i = 0; i < w.m.size(); ++i) os << (i ? "," : "") << w.m[i];
          os << ") stem=[";
          for (size_t i = 0; i < w.stem.size(); ++i) os << (i ? " " : "") << w.stem[i];
          os << "] cycle=[";
          for (size_t i = 0; i < w.cycle.size(); ++i) os << (i ? " " : "") << w.cycle[i];
          os << "]";
        }
      },
      *witness);
  return os.str();
}

namespace {

// Counter i+k folded into [0, n0 + p): exact below n0, then mod p.
long long fold_counter(long long t, long long n0, long long p) {
  return t < n0 + p ? t : n0 + (t - n0) % p;
}

// Search for a blocking prefix for ray `ray` at offset k. The state space is
// (core vertex, folded counter); a state is admissible when the vertex's
// spectrum misses the counter. Accepts at an entry vertex whose ray-entry
// union also misses the counter.
std::optional<ConditionYWitness> blocking_prefix(
    const Graph& g, const SpectrumFamily& fam, const Ray& ray,
    const SemilinearSet& entry_union, long long k) {
  const long long n0 = fam.preperiod, p = fam.period;
  struct State {
    std::string vertex;
    long long t;
  };
  struct Link {
    std::string prev_vertex;
    long long prev_t = -1;
    std::string edge;  // empty marks a search root
  };
  std::map<std::pair<std::string, long long>, Link> parent;
  std::deque<State> queue;
  auto admit = [&](const std::string& v, long long t, Link link) {
    if (fam.spectra.at(v).membership(t)) return;
    auto key = std::make_pair(v, t);
    if (parent.count(key)) return;
    parent[key] = std::move(link);
    queue.push_back({v, t});
  };
  for (const auto& v : g.vertices) admit(v, fold_counter(k, n0, p), {});
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (ray.entries.count(s.vertex) && !entry_union.membership(s.t)) {
      // rebuild the prefix path backwards through parent links
      std::vector<std::string> edges;
      std::string v = s.vertex;
      long long t = s.t;
      while (true) {
        const Link& l = parent.at({v, t});
        if (l.edge.empty()) break;
        edges.push_back(l.edge);
        v = l.prev_vertex;
        t = l.prev_t;
      }
      std::reverse(edges.begin(), edges.end());
      ConditionYWitness w;
      w.ray = ray.id;
      w.k = k;
      w.prefix = make_path(g, v, edges);
      w.explanation = "prefix vertices all miss incoming length i+k and the "
                      "ray entry spectrum misses c+k";
      return w;
    }
    for (const Edge* e : g.out_edges(s.vertex))
      admit(e->rng, fold_counter(s.t + 1, n0, p), {s.vertex, s.t, e->id});
  }
  return std::nullopt;
}

}  // namespace

Verdict condition_y(const Graph& g) {
  if (g.rays.empty()) {
    Verdict v = yes_verdict();
    v.criteria_trace.emplace_back("finite-core-shortcut", true);
    return v;
  }
  SpectrumFamily fam = all_length_spectra(g);
  const long long n0 = fam.preperiod, p = fam.period;
  for (const auto& ray : g.rays) {
    SemilinearSet u = SemilinearSet::empty_set();
    for (const auto& w : ray.entries) u = u.union_with(fam.spectra.at(w));
    for (long long k = 0; k < n0 + p; ++k)
      if (auto w = blocking_prefix(g, fam, ray, u, k)) return no_verdict(*w);
  }
  Verdict v = yes_verdict();
  v.criteria_trace.emplace_back("ray-product-search", true);
  return v;
}

Verdict strongly_z_graded(const Graph& g) {
  VertexClassification c = classify_vertices(g);
  Verdict v;
  v.criteria_trace.emplace_back("row-finite", c.row_finite);
  if (!c.row_finite) {
    for (const auto& [vx, f] : c.per_vertex)
      if (f.infinite_emitter) {
        Verdict out = no_verdict(InfiniteEmitterWitness{vx});
        out.criteria_trace = v.criteria_trace;
        return out;
      }
  }
  bool no_sinks = !c.has_sink;
  v.criteria_trace.emplace_back("no-sinks", no_sinks);
  if (!no_sinks) {
    for (const auto& [vx, f] : c.per_vertex)
      if (f.sink) {
        Verdict out = no_verdict(SinkWitness{vx});
        out.criteria_trace = v.criteria_trace;
        return out;
      }
  }
  Verdict cy = condition_y(g);
  v.criteria_trace.emplace_back("condition-y", cy.yes);
  if (!cy.yes) {
    Verdict out = no_verdict(*cy.witness);
    out.criteria_trace = v.criteria_trace;
    return out;
  }
  v.yes = true;
  return v;
}

Verdict strongly_zmod_graded(const Graph& g, long long n) {
  if (n < 1) throw DomainError("modulus must be >= 1");
  VertexClassification c = classify_vertices(g);
  if (n == 1) {
    Verdict v = yes_verdict();
    v.criteria_trace.emplace_back("trivial-grading", true);
    return v;
  }
  SpectrumFamily fam = all_length_spectra(g);
  for (const auto& vx : g.vertices) {
    const VertexFlags& f = c.per_vertex.at(vx);
    if (!f.singular) continue;
    if (!fam.spectra.at(vx).membership(n - 1)) {
      Verdict v = no_verdict(SingularReceivesWitness{vx, n - 1});
      v.criteria_trace.emplace_back("singular-receives", false);
      return v;
    }
  }
  Verdict v = yes_verdict();
  v.criteria_trace.emplace_back("singular-receives", true);
  return v;
}

}  // namespace stg
