#include "stg/lpa.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "stg/errors.hpp"

namespace stg {

std::string Monomial::show() const {
  std::string s = alpha.show();
  if (beta.length() > 0) {
    s += "(";
    s += beta.show();
    s += ")*";
  }
  return s;
}

Monomial vertex_monomial(const Graph& g, const std::string& v) {
  if (!g.has_vertex(v)) throw DomainError("unknown vertex '" + v + "'");
  Path p{v, {}};
  return Monomial{p, p};
}

Monomial make_monomial(const Graph& g, Path alpha, Path beta) {
  if (alpha.range(g) != beta.range(g))
    throw DomainError("monomial halves have different ranges");
  return Monomial{std::move(alpha), std::move(beta)};
}

namespace {

// True iff a is a prefix of b (same start, edge list prefix).
bool path_prefix(const Path& a, const Path& b) {
  if (a.start != b.start || a.length() > b.length()) return false;
  return std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
}

Path path_suffix(const Graph& g, const Path& whole, size_t from) {
  return shift(g, whole, from);
}

Path concat(const Path& a, const Path& b) {
  Path r = a;
  r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
  return r;
}

}  // namespace

std::optional<Monomial> multiply_monomials(const Graph& g, const Monomial& a,
                                           const Monomial& b) {
  // (alpha beta*)(gamma delta*) = alpha (beta* gamma) delta*
  if (path_prefix(a.beta, b.alpha)) {
    Path rest = path_suffix(g, b.alpha, a.beta.length());
    return make_monomial(g, concat(a.alpha, rest), b.beta);
  }
  if (path_prefix(b.alpha, a.beta)) {
    Path rest = path_suffix(g, a.beta, b.alpha.length());
    return make_monomial(g, a.alpha, concat(b.beta, rest));
  }
  return std::nullopt;
}

std::optional<std::string> distinguished_edge(const Graph& g, const std::string& v) {
  if (g.infinite_emitters.count(v)) return std::nullopt;
  const auto& out = g.out_edges(v);
  if (out.empty()) return std::nullopt;
  return out.front()->id;  // out_edges is id-sorted
}

bool mono_is_ck2_redex(const Graph& g, const Monomial& m) {
  if (m.alpha.edges.empty() || m.beta.edges.empty()) return false;
  if (m.alpha.edges.back() != m.beta.edges.back()) return false;
  const Edge& e = g.edge(m.alpha.edges.back());
  auto d = distinguished_edge(g, e.src);
  return d && *d == e.id;
}

namespace {

// Throws if a singular vertex is reachable from v within < steps steps.
void require_regular_horizon(const Graph& g, const std::string& v, long long steps) {
  VertexClassification c = classify_vertices(g);
  std::set<std::string> frontier{v};
  for (long long d = 0; d < steps; ++d) {
    std::set<std::string> next;
    for (const auto& w : frontier) {
      const VertexFlags& f = c.per_vertex.at(w);
      if (f.singular)
        throw DomainError("certificate obstructed by singular vertex '" + w + "'");
      for (const Edge* e : g.out_edges(w)) next.insert(e->rng);
    }
    frontier = std::move(next);
  }
}

LpaElement<long long> mono_elem(const Monomial& m) {
  LpaElement<long long> r;
  r.add_term(m, 1);
  return r;
}

}  // namespace

Certificate unit_factorization_certificate(const Graph& g, const std::string& v,
                                           long long n) {
  if (!g.has_vertex(v)) throw DomainError("unknown vertex '" + v + "'");
  Certificate cert;
  cert.vertex = v;
  cert.degree = n;
  if (n >= 0) {
    require_regular_horizon(g, v, n);
    for (const Path& mu : paths_from(g, v, n))
      cert.pairs.emplace_back(mono_elem(Monomial{mu, Path{mu.range(g), {}}}),
                              mono_elem(Monomial{Path{mu.range(g), {}}, mu}));
  } else {
    long long m = -n;
    // Complete antichain of paths from v whose endpoints sit on cycles:
    // v = sum of lambda lambda* over the antichain, and a cycle endpoint
    // receives paths of every length, so a companion kappa of length
    // |lambda| + m into r(lambda) always exists. The pair
    // (lambda kappa*, kappa lambda*) multiplies to lambda lambda*.
    VertexClassification cls = classify_vertices(g);
    std::set<std::string> cyc = cycle_vertices(g);
    const long long cap = max_enumeration_size();
    std::vector<Path> antichain;
    std::vector<Path> frontier{Path{v, {}}};
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (const Path& p : frontier) {
        const std::string w = p.range(g);
        if (static_cast<long long>(p.length()) >= m && cyc.count(w)) {
          antichain.push_back(p);
          continue;
        }
        if (cls.per_vertex.at(w).singular)
          throw DomainError("certificate obstructed by singular vertex '" + w + "'");
        if (static_cast<long long>(p.length()) >
            m + static_cast<long long>(g.vertices.size()))
          throw InternalInconsistency("antichain growth did not reach a cycle");
        for (const Edge* e : g.out_edges(w)) {
          Path q = p;
          q.edges.push_back(e->id);
          next.push_back(std::move(q));
        }
        if (static_cast<long long>(next.size() + antichain.size()) > cap)
          throw ResourceError("certificate antichain exceeds cap");
      }
      frontier = std::move(next);
    }
    std::sort(antichain.begin(), antichain.end());
    for (const Path& lam : antichain) {
      auto kappas = paths_into(g, lam.range(g), lam.length() + m);
      if (kappas.empty())
        throw InternalInconsistency("cycle vertex '" + lam.range(g) +
                                    "' misses an incoming length");
      const Path& kappa = kappas.front();  // lexicographically least
      cert.pairs.emplace_back(mono_elem(make_monomial(g, lam, kappa)),
                              mono_elem(make_monomial(g, kappa, lam)));
    }
  }
  if (!verify_certificate(g, cert))
    throw InternalInconsistency("constructed certificate failed re-verification");
  cert.verified = true;
  return cert;
}

bool verify_certificate(const Graph& g, const Certificate& cert) {
  LpaElement<long long> sum;
  for (const auto& [x, y] : cert.pairs) {
    auto dx = degree(x), dy = degree(y);
    if (!x.is_zero() && (!dx || *dx != cert.degree)) return false;
    if (!y.is_zero() && (!dy || *dy != -cert.degree)) return false;
    sum = sum + multiply(g, x, y);
  }
  return equals_mod_ck2(g, sum, lpa_vertex(g, cert.vertex, 1LL));
}

namespace {

// All monomials alpha beta* with |alpha| = la, |beta| = lb.
template <class Fn>
void for_monomials(const Graph& g, long long la, long long lb, Fn&& fn) {
  for (const auto& r : g.vertices) {
    auto as = paths_into(g, r, la);
    auto bs = paths_into(g, r, lb);
    for (const auto& a : as)
      for (const auto& b : bs) fn(Monomial{a, b});
  }
}

constexpr long long kOracleCap = 50'000;

template <class F>
class MonomialIndexer {
 public:
  typename SpanSolver<F>::Vec vec(const Graph& g, const LpaElement<F>& e) {
    typename SpanSolver<F>::Vec v;
    (void)g;
    for (const auto& [m, c] : e.terms) v[index(m)] = c;
    return v;
  }

 private:
  size_t index(const Monomial& m) {
    auto it = idx_.find(m);
    if (it != idx_.end()) return it->second;
    size_t n = idx_.size();
    idx_.emplace(m, n);
    return n;
  }
  std::map<Monomial, size_t> idx_;
};

// Core of both span oracles: products of monomials whose degrees satisfy
// left_deg/right_deg, targets reduced to normal form, exact span membership.
template <class F>
bool span_check(const Graph& g, long long depth,
                const std::function<bool(long long)>& left_deg,
                const std::function<bool(long long)>& right_deg,
                const std::vector<LpaElement<F>>& targets, const F& one) {
  std::vector<Monomial> left, right;
  long long count = 0;
  for (long long la = 0; la <= depth; ++la)
    for (long long lb = 0; lb <= depth; ++lb) {
      long long d = la - lb;
      if (!left_deg(d) && !right_deg(d)) continue;
      for_monomials(g, la, lb, [&](const Monomial& m) {
        if (left_deg(d)) left.push_back(m);
        if (right_deg(d)) right.push_back(m);
        if (++count > kOracleCap) throw ResourceError("span oracle monomial cap");
      });
    }
  MonomialIndexer<F> ix;
  SpanSolver<F> span;
  if (static_cast<long long>(left.size()) * static_cast<long long>(right.size()) >
      40 * kOracleCap)
    throw ResourceError("span oracle product cap");
  for (const auto& m1 : left)
    for (const auto& m2 : right)
      if (auto m = multiply_monomials(g, m1, m2)) {
        LpaElement<F> e;
        e.add_term(*m, one);
        span.add(ix.vec(g, ck2_reduce(g, e)));
      }
  for (const auto& t : targets)
    if (!span.contains(ix.vec(g, ck2_reduce(g, t)))) return false;
  return true;
}

}  // namespace

bool span_equality_oracle(const Graph& g, long long gamma, long long delta,
                          long long depth) {
  if (depth > max_truncation_depth()) throw ResourceError("depth beyond cap");
  std::vector<LpaElement<Rational>> targets;
  for (long long la = 0; la <= depth; ++la) {
    long long lb = la - (gamma + delta);
    if (lb < 0 || lb > depth) continue;
    for_monomials(g, la, lb, [&](const Monomial& m) {
      LpaElement<Rational> e;
      e.add_term(m, Rational(1));
      targets.push_back(std::move(e));
    });
  }
  return span_check<Rational>(
      g, depth, [&](long long d) { return d == gamma; },
      [&](long long d) { return d == delta; }, targets, Rational(1));
}

bool span_unit_oracle_zmod(const Graph& g, long long n, long long depth,
                           long long p) {
  if (n < 1) throw DomainError("modulus must be >= 1");
  if (depth > max_truncation_depth()) throw ResourceError("depth beyond cap");
  auto cls = [n](long long d) { return ((d % n) + n) % n; };
  for (long long c = 0; c < n; ++c) {
    bool ok;
    if (p > 0) {
      std::vector<LpaElement<Fp>> targets;
      for (const auto& v : g.vertices)
        targets.push_back(lpa_vertex(g, v, Fp(p, 1)));
      ok = span_check<Fp>(
          g, depth, [&](long long d) { return cls(d) == c; },
          [&](long long d) { return cls(d) == cls(-c); }, targets, Fp(p, 1));
    } else {
      std::vector<LpaElement<Rational>> targets;
      for (const auto& v : g.vertices)
        targets.push_back(lpa_vertex(g, v, Rational(1)));
      ok = span_check<Rational>(
          g, depth, [&](long long d) { return cls(d) == c; },
          [&](long long d) { return cls(d) == cls(-c); }, targets, Rational(1));
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace stg
