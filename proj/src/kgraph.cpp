#include "stg/kgraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <sstream>

#include "stg/errors.hpp"

namespace stg {

void KGraph::assign(const KGraph& o) {
  k = o.k;
  vertices = o.vertices;
  edges = o.edges;
  squares = o.squares;
  index();  // rebuild lookups against our own edge storage
}

void KGraph::index() {
  vset_.clear();
  eidx_.clear();
  out_.clear();
  for (const auto& v : vertices) vset_.insert(v);
  std::sort(edges.begin(), edges.end(),
            [](const KEdge& a, const KEdge& b) { return a.id < b.id; });
  for (size_t i = 0; i < edges.size(); ++i) {
    eidx_[edges[i].id] = i;
    out_[{edges[i].src, edges[i].color}].push_back(&edges[i]);
  }
}

const KEdge& KGraph::edge(const std::string& id) const {
  auto it = eidx_.find(id);
  if (it == eidx_.end()) throw DomainError("unknown edge '" + id + "'");
  return edges[it->second];
}

const std::vector<const KEdge*>& KGraph::out_edges(const std::string& v,
                                                   int color) const {
  auto it = out_.find({v, color});
  return it == out_.end() ? none_ : it->second;
}

namespace {

KGraphReport kfail(std::string msg) {
  KGraphReport r;
  r.valid = false;
  r.violation = std::move(msg);
  return r;
}

// (higher color, lower color) adjacent word -> (lower, higher): the inverse
// direction of the stored square table.
std::pair<std::string, std::string> swap_down(const KGraph& g, const std::string& b,
                                              const std::string& a) {
  int j = g.edge(b).color, i = g.edge(a).color;
  const auto& tab = g.squares.at({i, j});
  for (const auto& [key, val] : tab)
    if (val == std::make_pair(b, a)) return key;
  throw DomainError("square table misses the pair (" + b + "," + a + ")");
}

std::pair<std::string, std::string> swap_up(const KGraph& g, const std::string& a,
                                            const std::string& b) {
  int i = g.edge(a).color, j = g.edge(b).color;
  return g.squares.at({i, j}).at({a, b});
}

// One adjacent transposition keeping the word's value: word[t] word[t+1]
// becomes the square-equivalent pair in the other color order.
void swap_at(const KGraph& g, std::vector<std::string>& w, size_t t) {
  int c1 = g.edge(w[t]).color, c2 = g.edge(w[t + 1]).color;
  if (c1 == c2) throw DomainError("cannot swap equal colors");
  if (c1 < c2) {
    auto [b2, a2] = swap_up(g, w[t], w[t + 1]);
    w[t] = b2;
    w[t + 1] = a2;
  } else {
    auto [a2, b2] = swap_down(g, w[t], w[t + 1]);
    w[t] = a2;
    w[t + 1] = b2;
  }
}

// Bubble to nondecreasing color order; leftmost_first selects which
// inversion is resolved next (both must agree on validated graphs).
std::vector<std::string> sort_word(const KGraph& g, std::vector<std::string> w,
                                   bool leftmost_first = true) {
  while (true) {
    long long pos = -1;
    for (size_t t = 0; t + 1 < w.size(); ++t)
      if (g.edge(w[t]).color > g.edge(w[t + 1]).color) {
        pos = static_cast<long long>(t);
        if (leftmost_first) break;
      }
    if (pos < 0) return w;
    swap_at(g, w, static_cast<size_t>(pos));
  }
}

bool word_composable(const KGraph& g, const std::string& start,
                     const std::vector<std::string>& w) {
  std::string at = start;
  for (const auto& id : w) {
    const KEdge& e = g.edge(id);
    if (e.src != at) return false;
    at = e.rng;
  }
  return true;
}

}  // namespace

KGraphReport validate_kgraph(KGraph& g) {
  if (g.k < 1) return kfail("rank must be >= 1");
  g.index();
  std::set<std::string> seen;
  for (const auto& v : g.vertices)
    if (!seen.insert(v).second) return kfail("duplicate vertex '" + v + "'");
  for (const auto& e : g.edges) {
    if (!seen.insert(e.id).second) return kfail("duplicate id '" + e.id + "'");
    if (!g.has_vertex(e.src) || !g.has_vertex(e.rng))
      return kfail("edge '" + e.id + "' has undeclared endpoint");
    if (e.color < 0 || e.color >= g.k)
      return kfail("edge '" + e.id + "' color out of range");
  }
  for (const auto& [pair, tab] : g.squares)
    if (pair.first < 0 || pair.second <= pair.first || pair.second >= g.k)
      return kfail("square table for a bad color pair");
  for (int i = 0; i < g.k; ++i)
    for (int j = i + 1; j < g.k; ++j) {
      std::map<std::pair<std::string, std::string>, int> expect_val;
      for (const auto& b : g.edges) {
        if (b.color != j) continue;
        for (const KEdge* a2 : g.out_edges(b.rng, i)) expect_val[{b.id, a2->id}] = 0;
      }
      auto it = g.squares.find({i, j});
      const auto& tab = it == g.squares.end()
                            ? std::map<std::pair<std::string, std::string>,
                                       std::pair<std::string, std::string>>{}
                            : it->second;
      size_t keys_needed = 0;
      for (const auto& a : g.edges) {
        if (a.color != i) continue;
        for (const KEdge* b : g.out_edges(a.rng, j)) {
          ++keys_needed;
          auto kt = tab.find({a.id, b->id});
          if (kt == tab.end())
            return kfail("square missing for (" + a.id + "," + b->id + ")");
          const auto& [b2, a2] = kt->second;
          if (g.edge(b2).color != j || g.edge(a2).color != i)
            return kfail("square colors wrong at (" + a.id + "," + b->id + ")");
          if (g.edge(b2).src != a.src || g.edge(a2).src != g.edge(b2).rng ||
              g.edge(a2).rng != b->rng)
            return kfail("square endpoints wrong at (" + a.id + "," + b->id + ")");
          auto et = expect_val.find({b2, a2});
          if (et == expect_val.end() || ++et->second > 1)
            return kfail("square not bijective at (" + a.id + "," + b->id + ")");
        }
      }
      if (keys_needed != tab.size()) return kfail("square table has extra entries");
      for (const auto& [val, cnt] : expect_val)
        if (cnt != 1)
          return kfail("square value (" + val.first + "," + val.second + ") unused");
    }
  if (g.k >= 3) {
    // coherence: both bubble strategies agree on every tricolored word
    for (const auto& x : g.edges)
      for (const KEdge* y : [&] {
        std::vector<const KEdge*> all;
        for (int c = 0; c < g.k; ++c)
          for (const KEdge* e : g.out_edges(x.rng, c)) all.push_back(e);
        return all;
      }())
        for (int c = 0; c < g.k; ++c)
          for (const KEdge* z : g.out_edges(y->rng, c)) {
            std::set<int> colors{x.color, y->color, z->color};
            if (colors.size() != 3) continue;
            std::vector<std::string> w{x.id, y->id, z->id};
            if (sort_word(g, w, true) != sort_word(g, w, false))
              return kfail("square coherence fails on (" + x.id + "," + y->id +
                           "," + z->id + ")");
          }
  }
  return {};
}

KPath make_kpath(const KGraph& g, const std::string& start,
                 std::vector<std::string> word) {
  if (!g.has_vertex(start)) throw DomainError("unknown vertex '" + start + "'");
  if (!word_composable(g, start, word)) throw DomainError("word not composable");
  return KPath{start, sort_word(g, std::move(word))};
}

std::vector<long long> kpath_degree(const KGraph& g, const KPath& p) {
  std::vector<long long> d(g.k, 0);
  for (const auto& id : p.word) ++d[g.edge(id).color];
  return d;
}

std::string kpath_range(const KGraph& g, const KPath& p) {
  return p.word.empty() ? p.start : g.edge(p.word.back()).rng;
}

KPath compose_kpaths(const KGraph& g, const KPath& a, const KPath& b) {
  if (kpath_range(g, a) != b.start)
    throw DomainError("paths not composable");
  std::vector<std::string> w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  return make_kpath(g, a.start, std::move(w));
}

std::pair<KPath, KPath> split_kpath(const KGraph& g, const KPath& p,
                                    const std::vector<long long>& m) {
  std::vector<long long> d = kpath_degree(g, p);
  if (static_cast<int>(m.size()) != g.k) throw DomainError("degree rank mismatch");
  std::vector<long long> need = m;
  for (int i = 0; i < g.k; ++i)
    if (need[i] < 0 || need[i] > d[i]) throw DomainError("split degree out of range");
  std::vector<std::string> rest = p.word, prefix;
  while (true) {
    bool more = false;
    for (int i = 0; i < g.k; ++i) more |= need[i] > 0;
    if (!more) break;
    size_t t = 0;
    while (t < rest.size() && need[g.edge(rest[t]).color] == 0) ++t;
    if (t == rest.size()) throw InternalInconsistency("split ran out of edges");
    while (t > 0) {
      swap_at(g, rest, t - 1);
      --t;
    }
    --need[g.edge(rest[0]).color];
    prefix.push_back(rest[0]);
    rest.erase(rest.begin());
  }
  KPath first = make_kpath(g, p.start, std::move(prefix));
  KPath second = make_kpath(g, kpath_range(g, first), std::move(rest));
  return {first, second};
}

KPath segment(const KGraph& g, const KPath& p, const std::vector<long long>& m,
              const std::vector<long long>& n) {
  return split_kpath(g, split_kpath(g, p, n).first, m).second;
}

namespace {

void enumerate_color_runs(const KGraph& g, const std::string& v,
                          const std::vector<long long>& m, int color,
                          std::vector<std::string>& word, std::vector<KPath>& out) {
  if (color == g.k) {
    out.push_back(KPath{v, word});
    return;
  }
  // run of m[color] edges of this color starting where the word currently ends
  std::function<void(const std::string&, long long)> rec =
      [&](const std::string& at, long long left) {
        if (left == 0) {
          enumerate_color_runs(g, v, m, color + 1, word, out);
          return;
        }
        for (const KEdge* e : g.out_edges(at, color)) {
          word.push_back(e->id);
          rec(e->rng, left - 1);
          word.pop_back();
        }
      };
  std::string at = v;
  for (const auto& id : word) at = g.edge(id).rng;
  rec(at, m[color]);
}

}  // namespace

std::vector<KPath> paths_of_degree(const KGraph& g, const std::string& v,
                                   const std::vector<long long>& m) {
  if (!g.has_vertex(v)) throw DomainError("unknown vertex '" + v + "'");
  std::vector<KPath> out;
  std::vector<std::string> word;
  enumerate_color_runs(g, v, m, 0, word, out);
  for (auto& p : out) p.start = v;
  std::sort(out.begin(), out.end());
  if (static_cast<long long>(out.size()) > max_enumeration_size())
    throw ResourceError("path enumeration exceeds cap");
  return out;
}

std::vector<std::pair<KPath, KPath>> lambda_min(const KGraph& g, const KPath& lambda,
                                                const KPath& mu) {
  std::vector<std::pair<KPath, KPath>> out;
  if (lambda.start != mu.start) return out;
  std::vector<long long> dl = kpath_degree(g, lambda), dm = kpath_degree(g, mu);
  std::vector<long long> join(g.k), el(g.k), em(g.k);
  for (int i = 0; i < g.k; ++i) {
    join[i] = std::max(dl[i], dm[i]);
    el[i] = join[i] - dl[i];
    em[i] = join[i] - dm[i];
  }
  auto rhos = paths_of_degree(g, kpath_range(g, lambda), el);
  auto taus = paths_of_degree(g, kpath_range(g, mu), em);
  std::map<KPath, std::vector<KPath>> by_ext;
  for (const auto& tau : taus) by_ext[compose_kpaths(g, mu, tau)].push_back(tau);
  for (const auto& rho : rhos) {
    auto it = by_ext.find(compose_kpaths(g, lambda, rho));
    if (it == by_ext.end()) continue;
    for (const auto& tau : it->second) out.emplace_back(rho, tau);
  }
  return out;
}

std::vector<KPath> mce(const KGraph& g, const KPath& lambda, const KPath& mu) {
  std::set<KPath> out;
  for (const auto& [rho, tau] : lambda_min(g, lambda, mu))
    out.insert(compose_kpaths(g, lambda, rho));
  return {out.begin(), out.end()};
}

bool is_exhaustive(const KGraph& g, const std::string& v,
                   const std::vector<KPath>& e) {
  std::vector<long long> bound(g.k, 0);
  for (const auto& mu : e) {
    if (mu.start != v) throw DomainError("exhaustive-set path not at the vertex");
    std::vector<long long> d = kpath_degree(g, mu);
    for (int i = 0; i < g.k; ++i) bound[i] = std::max(bound[i], d[i]);
  }
  std::vector<long long> m(g.k, 0);
  while (true) {
    for (const auto& lambda : paths_of_degree(g, v, m)) {
      bool met = false;
      for (const auto& mu : e)
        if (!lambda_min(g, lambda, mu).empty()) {
          met = true;
          break;
        }
      if (!met) return false;
    }
    int i = g.k - 1;
    for (; i >= 0; --i) {
      if (++m[i] <= bound[i]) break;
      m[i] = 0;
    }
    if (i < 0) break;
  }
  return true;
}

std::vector<KPath> ext_paths(const KGraph& g, const KPath& lambda,
                             const std::vector<KPath>& e) {
  std::set<KPath> out;
  for (const auto& mu : e)
    for (const auto& [rho, tau] : lambda_min(g, lambda, mu)) out.insert(rho);
  return {out.begin(), out.end()};
}

std::vector<KPath> edge_set(const KGraph& g, const std::vector<KPath>& e) {
  std::set<KPath> out;
  for (const auto& lambda : e) {
    std::vector<long long> d = kpath_degree(g, lambda);
    for (int i = 0; i < g.k; ++i) {
      if (d[i] == 0) continue;
      std::vector<long long> ei(g.k, 0);
      ei[i] = 1;
      out.insert(split_kpath(g, lambda, ei).first);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

using BoolMat = std::vector<std::vector<bool>>;

BoolMat mat_mul(const BoolMat& a, const BoolMat& b) {
  size_t n = a.size();
  BoolMat c(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < n; ++l)
      if (a[i][l])
        for (size_t j = 0; j < n; ++j)
          if (b[l][j]) c[i][j] = true;
  return c;
}

}  // namespace

GridPeriodicFamily source_sets(const KGraph& g) {
  std::vector<std::string> verts = g.vertices;
  std::sort(verts.begin(), verts.end());
  std::map<std::string, size_t> idx;
  for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = i;
  size_t n = verts.size();

  // powers[i][t] = M_i^t with M[w][u] = edge u -> w of color i
  std::vector<std::vector<BoolMat>> powers(g.k);
  GridPeriodicFamily fam;
  fam.dimension = g.k;
  const long long cap = max_enumeration_size();
  for (int i = 0; i < g.k; ++i) {
    BoolMat m(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges)
      if (e.color == i) m[idx.at(e.rng)][idx.at(e.src)] = true;
    BoolMat cur(n, std::vector<bool>(n, false));
    for (size_t d = 0; d < n; ++d) cur[d][d] = true;
    std::map<BoolMat, size_t> seen;
    long long start = -1;
    while (true) {
      auto [it, fresh] = seen.emplace(cur, powers[i].size());
      if (!fresh) {
        start = static_cast<long long>(it->second);
        break;
      }
      powers[i].push_back(cur);
      if (static_cast<long long>(powers[i].size()) > cap)
        throw ResourceError("matrix power iteration exceeds cap");
      cur = mat_mul(m, cur);
    }
    fam.preperiod.push_back(start);
    fam.period.push_back(static_cast<long long>(powers[i].size()) - start);
  }

  long long cells = 1;
  for (int i = 0; i < g.k; ++i) {
    cells *= fam.preperiod[i] + fam.period[i];
    if (cells > cap) throw ResourceError("grid-periodic table exceeds cap");
  }
  std::vector<long long> m(g.k, 0);
  while (true) {
    std::vector<bool> s(n, true);
    for (int i = 0; i < g.k; ++i) {
      const BoolMat& p = powers[i][m[i]];
      std::vector<bool> next(n, false);
      for (size_t r = 0; r < n; ++r) {
        if (!s[r]) continue;
        for (size_t c = 0; c < n; ++c)
          if (p[c][r]) next[c] = true;
      }
      s = std::move(next);
    }
    std::set<std::string> cell;
    for (size_t r = 0; r < n; ++r)
      if (s[r]) cell.insert(verts[r]);
    fam.table[m] = std::move(cell);
    int i = g.k - 1;
    for (; i >= 0; --i) {
      if (++m[i] < fam.preperiod[i] + fam.period[i]) break;
      m[i] = 0;
    }
    if (i < 0) break;
  }
  return fam;
}

namespace {

std::string state_name(const std::string& v, const std::vector<long long>& phase) {
  std::ostringstream os;
  os << v << "@(";
  for (size_t i = 0; i < phase.size(); ++i) os << (i ? "," : "") << phase[i];
  os << ")";
  return os.str();
}

struct ProductGraph {
  // bad states only; edges carry colors
  std::vector<std::pair<std::string, std::vector<long long>>> states;
  std::map<std::pair<std::string, std::vector<long long>>, size_t> id;
  std::vector<std::vector<std::pair<size_t, int>>> succ;  // (target, color)
};

}  // namespace

Verdict condition_y_kgraph(const KGraph& g) {
  for (const auto& v : g.vertices)
    for (int c = 0; c < g.k; ++c)
      if (g.out_edges(v, c).empty())
        throw DomainError("graph has a source; strong grading already fails");
  GridPeriodicFamily fam = source_sets(g);

  auto bump = [&](std::vector<long long> phase, int color) {
    if (++phase[color] >= fam.preperiod[color] + fam.period[color])
      phase[color] = fam.preperiod[color];
    return phase;
  };
  auto bad = [&](const std::string& v, const std::vector<long long>& phase) {
    return fam.table.at(phase).count(v) == 0;
  };

  for (const auto& [m, cell] : fam.table) {
    (void)cell;
    // bad-state product graph reachable from phase fold(m) at step zero
    ProductGraph pg;
    std::deque<size_t> queue;
    auto intern = [&](const std::string& v, const std::vector<long long>& phase)
        -> std::optional<size_t> {
      if (!bad(v, phase)) return std::nullopt;
      auto key = std::make_pair(v, phase);
      auto it = pg.id.find(key);
      if (it != pg.id.end()) return it->second;
      size_t s = pg.states.size();
      pg.id.emplace(key, s);
      pg.states.push_back(key);
      pg.succ.emplace_back();
      queue.push_back(s);
      return s;
    };
    std::vector<size_t> roots;
    for (const auto& v : g.vertices)
      if (auto s = intern(v, m)) roots.push_back(*s);
    while (!queue.empty()) {
      size_t s = queue.front();
      queue.pop_front();
      auto [v, phase] = pg.states[s];
      for (int c = 0; c < g.k; ++c) {
        std::vector<long long> np = bump(phase, c);
        for (const KEdge* e : g.out_edges(v, c))
          if (auto t = intern(e->rng, np)) pg.succ[s].emplace_back(*t, c);
      }
    }
    if (pg.states.empty()) continue;

    // Kosaraju SCC on the bad subgraph
    size_t n = pg.states.size();
    std::vector<size_t> order;
    std::vector<char> vis(n, 0);
    for (size_t r = 0; r < n; ++r) {
      if (vis[r]) continue;
      std::vector<std::pair<size_t, size_t>> stack{{r, 0}};
      vis[r] = 1;
      while (!stack.empty()) {
        auto& [u, ei] = stack.back();
        if (ei < pg.succ[u].size()) {
          size_t w = pg.succ[u][ei++].first;
          if (!vis[w]) {
            vis[w] = 1;
            stack.emplace_back(w, 0);
          }
        } else {
          order.push_back(u);
          stack.pop_back();
        }
      }
    }
    std::vector<std::vector<size_t>> pred(n);
    for (size_t u = 0; u < n; ++u)
      for (const auto& [w, c] : pg.succ[u]) pred[w].push_back(u);
    std::vector<long long> compo(n, -1);
    long long ncomp = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (compo[*it] >= 0) continue;
      std::vector<size_t> stack{*it};
      compo[*it] = ncomp;
      while (!stack.empty()) {
        size_t u = stack.back();
        stack.pop_back();
        for (size_t w : pred[u])
          if (compo[w] < 0) {
            compo[w] = ncomp;
            stack.push_back(w);
          }
      }
      ++ncomp;
    }
    // internal edge colors per component
    std::vector<std::set<int>> colors(ncomp);
    std::vector<std::vector<std::pair<size_t, std::pair<size_t, int>>>> internal(ncomp);
    for (size_t u = 0; u < n; ++u)
      for (const auto& [w, c] : pg.succ[u])
        if (compo[u] == compo[w]) {
          colors[compo[u]].insert(c);
          internal[compo[u]].push_back({u, {w, c}});
        }
    for (long long comp = 0; comp < ncomp; ++comp) {
      if (static_cast<int>(colors[comp].size()) != g.k) continue;
      // witness: stem from a root to the component, then a closed walk
      // through one edge of every color
      std::vector<long long> dist(n, -1);
      std::vector<long long> par(n, -1);
      std::deque<size_t> bfs;
      for (size_t r : roots)
        if (dist[r] < 0) {
          dist[r] = 0;
          bfs.push_back(r);
        }
      size_t entry = n;
      while (!bfs.empty()) {
        size_t u = bfs.front();
        bfs.pop_front();
        if (compo[u] == comp) {
          entry = u;
          break;
        }
        for (const auto& [w, c] : pg.succ[u])
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            par[w] = static_cast<long long>(u);
            bfs.push_back(w);
          }
      }
      if (entry == n) continue;  // component not reachable from a root
      LassoWitness lw;
      lw.m = m;
      for (long long u = static_cast<long long>(entry); u >= 0; u = par[u])
        lw.stem.push_back(state_name(pg.states[u].first, pg.states[u].second));
      std::reverse(lw.stem.begin(), lw.stem.end());
      // closed walk: hop between chosen per-color edges inside the component
      auto walk_to = [&](size_t from, size_t to) {
        std::vector<long long> d2(n, -1), p2(n, -1);
        std::deque<size_t> q2{from};
        d2[from] = 0;
        while (!q2.empty()) {
          size_t u = q2.front();
          q2.pop_front();
          if (u == to) break;
          for (const auto& [w, c] : pg.succ[u])
            if (compo[w] == comp && d2[w] < 0) {
              d2[w] = d2[u] + 1;
              p2[w] = static_cast<long long>(u);
              q2.push_back(w);
            }
        }
        std::vector<size_t> path;
        for (long long u = static_cast<long long>(to); u >= 0; u = p2[u])
          path.push_back(static_cast<size_t>(u));
        std::reverse(path.begin(), path.end());
        return path;  // includes both endpoints
      };
      std::vector<std::pair<size_t, std::pair<size_t, int>>> picks;
      for (int c = 0; c < g.k; ++c)
        for (const auto& ie : internal[comp])
          if (ie.second.second == c) {
            picks.push_back(ie);
            break;
          }
      size_t at = entry;
      for (const auto& [u, wc] : picks) {
        for (size_t s : walk_to(at, u)) lw.cycle.push_back(
            state_name(pg.states[s].first, pg.states[s].second));
        lw.cycle.pop_back();
        lw.cycle.push_back(state_name(pg.states[u].first, pg.states[u].second));
        at = wc.first;
      }
      for (size_t s : walk_to(at, entry))
        lw.cycle.push_back(state_name(pg.states[s].first, pg.states[s].second));
      return no_verdict(lw);
    }
  }
  Verdict v = yes_verdict();
  v.criteria_trace.emplace_back("phase-lasso-search", true);
  return v;
}

Verdict strongly_zk_graded(const KGraph& g) {
  for (const auto& v : g.vertices)
    for (int c = 0; c < g.k; ++c)
      if (g.out_edges(v, c).empty()) {
        Verdict out = no_verdict(SourceWitness{v, c});
        out.criteria_trace.emplace_back("no-sources", false);
        return out;
      }
  Verdict cy = condition_y_kgraph(g);
  Verdict out;
  out.criteria_trace.emplace_back("no-sources", true);
  out.criteria_trace.emplace_back("condition-y", cy.yes);
  out.yes = cy.yes;
  out.witness = cy.witness;
  return out;
}

KGraph kgraph_from_graph(const Graph& g) {
  if (!g.infinite_emitters.empty() || !g.rays.empty())
    throw DomainError("only plain finite graphs translate to rank-1 graphs");
  KGraph kg;
  kg.k = 1;
  kg.vertices = g.vertices;
  for (const auto& e : g.edges) kg.edges.push_back({e.id, e.src, e.rng, 0});
  KGraphReport rep = validate_kgraph(kg);
  if (!rep.valid) throw InternalInconsistency("translated graph invalid: " + rep.violation);
  return kg;
}

}  // namespace stg
