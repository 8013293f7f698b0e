#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stg/criteria.hpp"
#include "stg/graph.hpp"
#include "stg/linalg.hpp"

namespace stg {

// alpha beta* with r(alpha) = r(beta); a vertex is alpha = beta = the vertex.
struct Monomial {
  Path alpha;
  Path beta;

  long long degree() const {
    return static_cast<long long>(alpha.length()) -
           static_cast<long long>(beta.length());
  }
  bool operator==(const Monomial& o) const = default;
  bool operator<(const Monomial& o) const {
    auto key = [](const Monomial& m) {
      return std::make_tuple(m.alpha.length(), m.alpha, m.beta.length(), m.beta);
    };
    return key(*this) < key(o);
  }
  std::string show() const;
};

Monomial vertex_monomial(const Graph& g, const std::string& v);
Monomial make_monomial(const Graph& g, Path alpha, Path beta);

// Finite linear combination of monomials; no zero coefficients stored.
template <class C>
struct LpaElement {
  std::map<Monomial, C> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Monomial& m, const C& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (!field_is_zero(c)) terms.emplace(m, c);
      return;
    }
    it->second = it->second + c;
    if (field_is_zero(it->second)) terms.erase(it);
  }
  LpaElement operator+(const LpaElement& o) const {
    LpaElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
  }
  LpaElement operator-(const LpaElement& o) const {
    LpaElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
  }
  bool operator==(const LpaElement& o) const { return terms == o.terms; }
};

// Product of two monomials under (CK1); nullopt when the product is zero.
std::optional<Monomial> multiply_monomials(const Graph& g, const Monomial& a,
                                           const Monomial& b);

template <class C>
LpaElement<C> multiply(const Graph& g, const LpaElement<C>& a, const LpaElement<C>& b) {
  LpaElement<C> r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms)
      if (auto m = multiply_monomials(g, ma, mb)) r.add_term(*m, ca * cb);
  return r;
}

template <class C>
std::optional<long long> degree(const LpaElement<C>& a) {
  std::optional<long long> d;
  for (const auto& [m, c] : a.terms) {
    if (!d)
      d = m.degree();
    else if (*d != m.degree())
      return std::nullopt;
  }
  return d;
}

template <class C>
std::map<long long, LpaElement<C>> homogeneous_components(const LpaElement<C>& a) {
  std::map<long long, LpaElement<C>> out;
  for (const auto& [m, c] : a.terms) out[m.degree()].add_term(m, c);
  return out;
}

// Lexicographically least edge emitted by a regular vertex. The reverse-CK2
// rewrite below contracts monomials whose alpha and beta both end in this
// edge; the surviving monomials are the standard basis of the path algebra,
// so an element is zero in the algebra iff its normal form is empty.
std::optional<std::string> distinguished_edge(const Graph& g, const std::string& v);

bool mono_is_ck2_redex(const Graph& g, const Monomial& m);

// Rewrites (alpha e)(beta e)* -> alpha beta* - sum over other edges e' at the
// same source of (alpha e')(beta e')*, for e distinguished. Terminating.
template <class C>
LpaElement<C> ck2_reduce(const Graph& g, LpaElement<C> a) {
  while (true) {
    const Monomial* redex = nullptr;
    for (const auto& [m, c] : a.terms)
      if (mono_is_ck2_redex(g, m)) {
        redex = &m;
        break;
      }
    if (!redex) return a;
    Monomial m = *redex;
    C c = a.terms.at(m);
    a.terms.erase(m);
    Path sa = m.alpha, sb = m.beta;
    sa.edges.pop_back();
    sb.edges.pop_back();
    const std::string src = g.edge(m.alpha.edges.back()).src;
    a.add_term(make_monomial(g, sa, sb), c);
    for (const Edge* e : g.out_edges(src)) {
      if (e->id == m.alpha.edges.back()) continue;
      Path xa = sa, xb = sb;
      xa.edges.push_back(e->id);
      xb.edges.push_back(e->id);
      a.add_term(make_monomial(g, xa, xb), -c);
    }
  }
}

template <class C>
bool equals_mod_ck2(const Graph& g, const LpaElement<C>& a, const LpaElement<C>& b) {
  return ck2_reduce(g, a - b).is_zero();
}

template <class C>
LpaElement<C> lpa_vertex(const Graph& g, const std::string& v, const C& one) {
  LpaElement<C> r;
  r.add_term(vertex_monomial(g, v), one);
  return r;
}

struct Certificate {
  std::string vertex;
  long long degree = 0;
  std::vector<std::pair<LpaElement<long long>, LpaElement<long long>>> pairs;
  bool verified = false;
};

// Pairs (x_i, y_i) homogeneous of degrees n and -n with sum x_i y_i = v,
// re-verified symbolically. Requires row-finite, no relevant sinks.
Certificate unit_factorization_certificate(const Graph& g, const std::string& v,
                                           long long n);

// Verifies an arbitrary certificate against the graph from scratch.
bool verify_certificate(const Graph& g, const Certificate& cert);

// True iff every basis monomial of degree gamma+delta with |alpha|,|beta| <=
// depth lies in the span of products of truncated monomials of degrees gamma
// and delta. Exact linear algebra over Q.
bool span_equality_oracle(const Graph& g, long long gamma, long long delta,
                          long long depth);

// Z/n analogue for local units: every vertex lies in the span of products of
// truncated monomials with degrees in the classes c and -c mod n, for every
// class c. Field is Q or, if p > 0, Z/p.
bool span_unit_oracle_zmod(const Graph& g, long long n, long long depth,
                           long long p = 0);

}  // namespace stg
