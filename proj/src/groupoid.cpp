#include "stg/groupoid.hpp"

#include <algorithm>
#include <sstream>

#include "stg/errors.hpp"

namespace stg {

namespace {

GroupoidReport fail(std::string msg) {
  GroupoidReport r;
  r.valid = false;
  r.violation = std::move(msg);
  return r;
}

}  // namespace

GroupoidReport validate_groupoid(const Groupoid& g) {
  std::set<std::string> ms(g.morphisms.begin(), g.morphisms.end());
  if (ms.size() != g.morphisms.size()) return fail("duplicate morphism id");
  for (const auto& u : g.units) {
    if (!ms.count(u)) return fail("unit '" + u + "' not a morphism");
    if (g.dom.at(u) != u || g.cod.at(u) != u)
      return fail("unit '" + u + "' has dom/cod != itself");
  }
  for (const auto& x : g.morphisms) {
    if (!g.dom.count(x) || !g.cod.count(x) || !g.inv.count(x) || !g.deg.count(x))
      return fail("morphism '" + x + "' missing table entries");
    if (!g.units.count(g.dom.at(x)) || !g.units.count(g.cod.at(x)))
      return fail("dom/cod of '" + x + "' is not a unit");
    if (!ms.count(g.inv.at(x))) return fail("inverse of '" + x + "' not a morphism");
  }
  // composition table domain is exactly the composable pairs
  for (const auto& x : g.morphisms)
    for (const auto& y : g.morphisms) {
      bool should = g.composable(x, y);
      bool has = g.comp.count({x, y}) > 0;
      if (should != has)
        return fail("composition table wrong on (" + x + "," + y + ")");
      if (!has) continue;
      const std::string& xy = g.comp.at({x, y});
      if (!ms.count(xy)) return fail("composite of (" + x + "," + y + ") unknown");
      if (g.dom.at(xy) != g.dom.at(y) || g.cod.at(xy) != g.cod.at(x))
        return fail("dom/cod of composite (" + x + "," + y + ") wrong");
      if (g.group.reduce(g.deg.at(xy)) !=
          g.group.add(g.deg.at(x), g.deg.at(y)))
        return fail("degree functor violated on (" + x + "," + y + ")");
    }
  // associativity
  for (const auto& x : g.morphisms)
    for (const auto& y : g.morphisms) {
      if (!g.composable(x, y)) continue;
      for (const auto& z : g.morphisms) {
        if (!g.composable(y, z)) continue;
        if (g.comp.at({g.comp.at({x, y}), z}) != g.comp.at({x, g.comp.at({y, z})}))
          return fail("associativity fails on (" + x + "," + y + "," + z + ")");
      }
    }
  // units neutral, inverses
  for (const auto& x : g.morphisms) {
    if (g.comp.at({x, g.dom.at(x)}) != x || g.comp.at({g.cod.at(x), x}) != x)
      return fail("unit not neutral at '" + x + "'");
    const std::string& xi = g.inv.at(x);
    if (g.inv.at(xi) != x) return fail("inverse not involutive at '" + x + "'");
    if (g.dom.at(xi) != g.cod.at(x) || g.cod.at(xi) != g.dom.at(x))
      return fail("inverse endpoints wrong at '" + x + "'");
    if (g.comp.at({x, xi}) != g.cod.at(x) || g.comp.at({xi, x}) != g.dom.at(x))
      return fail("x inverse composition not a unit at '" + x + "'");
  }
  for (const auto& u : g.units)
    if (!g.group.is_identity(g.deg.at(u)))
      return fail("unit '" + u + "' has nonidentity degree");
  return {};
}

namespace {

std::set<std::string> component(const Groupoid& g, const GroupElem& gamma) {
  std::set<std::string> out;
  GroupElem c = g.group.reduce(gamma);
  for (const auto& m : g.morphisms)
    if (g.group.reduce(g.deg.at(m)) == c) out.insert(m);
  return out;
}

std::set<std::string> set_product(const Groupoid& g, const std::set<std::string>& a,
                                  const std::set<std::string>& b) {
  std::set<std::string> out;
  for (const auto& x : a)
    for (const auto& y : b)
      if (g.composable(x, y)) out.insert(g.comp.at({x, y}));
  return out;
}

}  // namespace

StrongGradingReport strong_grading_check(const Groupoid& g,
                                         const std::vector<GroupElem>& degrees) {
  StrongGradingReport r;
  std::ostringstream why;
  for (const auto& gamma : degrees) {
    std::set<std::string> gg = component(g, gamma);
    if (r.products_fill)
      for (const auto& delta : degrees)
        if (set_product(g, gg, component(g, delta)) !=
            component(g, g.group.add(gamma, delta))) {
          r.products_fill = false;
          why << "products miss at (" << g.group.show(gamma) << ","
              << g.group.show(delta) << "); ";
          break;
        }
    if (r.inverses_fill &&
        set_product(g, gg, component(g, g.group.neg(gamma))) !=
            component(g, g.group.identity())) {
      r.inverses_fill = false;
      why << "inverse products miss at " << g.group.show(gamma) << "; ";
    }
    std::set<std::string> doms, cods;
    for (const auto& x : gg) {
      doms.insert(g.dom.at(x));
      cods.insert(g.cod.at(x));
    }
    if (r.domains_cover && doms != g.units) {
      r.domains_cover = false;
      why << "dom does not cover units at " << g.group.show(gamma) << "; ";
    }
    if (r.codomains_cover && cods != g.units) {
      r.codomains_cover = false;
      why << "cod does not cover units at " << g.group.show(gamma) << "; ";
    }
  }
  r.failure = why.str();
  return r;
}

StrongGradingReport strong_grading_check(const Groupoid& g) {
  if (!g.group.is_finite())
    throw DomainError("infinite grading group needs an explicit degree window");
  return strong_grading_check(g, g.group.elements());
}

Groupoid regrade_quotient(const Groupoid& g, const Subgroup& omega) {
  Presentation q = present_quotient(g.group, omega);
  Groupoid out = g;
  out.group = q.group;
  for (auto& [m, d] : out.deg) d = q.coords.at(g.group.reduce(d));
  return out;
}

Groupoid restrict_subgroupoid(const Groupoid& g, const Subgroup& omega) {
  Presentation s = present_subgroup(g.group, omega);
  std::set<GroupElem> in_omega(omega.elements.begin(), omega.elements.end());
  Groupoid out;
  out.group = s.group;
  for (const auto& m : g.morphisms) {
    if (!in_omega.count(g.group.reduce(g.deg.at(m)))) continue;
    out.morphisms.push_back(m);
    out.dom[m] = g.dom.at(m);
    out.cod[m] = g.cod.at(m);
    out.inv[m] = g.inv.at(m);
    out.deg[m] = s.coords.at(g.group.reduce(g.deg.at(m)));
  }
  std::set<std::string> kept(out.morphisms.begin(), out.morphisms.end());
  for (const auto& u : g.units)
    if (kept.count(u)) out.units.insert(u);
  for (const auto& [xy, z] : g.comp)
    if (kept.count(xy.first) && kept.count(xy.second)) out.comp[xy] = z;
  return out;
}

namespace {

bool path_prefix(const Path& a, const Path& b) {
  if (a.start != b.start || a.length() > b.length()) return false;
  return std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
}

Path concat(const Path& a, const Path& b) {
  Path r = a;
  r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
  return r;
}

}  // namespace

std::optional<CylinderBisection> compose_bisections(const Graph& g,
                                                    const CylinderBisection& a,
                                                    const CylinderBisection& b) {
  if (!a.excluded.empty() || !b.excluded.empty())
    throw DomainError("composition with excluded extension sets is unsupported");
  if (path_prefix(a.beta, b.alpha)) {
    Path rest = shift(g, b.alpha, a.beta.length());
    return CylinderBisection{concat(a.alpha, rest), b.beta, {}};
  }
  if (path_prefix(b.alpha, a.beta)) {
    Path rest = shift(g, a.beta, b.alpha.length());
    return CylinderBisection{a.alpha, concat(b.beta, rest), {}};
  }
  return std::nullopt;
}

void validate_partial_action(const PartialAction& p) {
  if (!p.group.is_finite()) throw ValidationError("partial action group must be finite");
  std::set<std::string> x(p.space.begin(), p.space.end());
  GroupElem eps = p.group.identity();
  for (const auto& gamma : p.group.elements()) {
    auto dit = p.domains.find(gamma);
    auto mit = p.maps.find(gamma);
    if (dit == p.domains.end() || mit == p.maps.end())
      throw ValidationError("missing tables for " + p.group.show(gamma));
    for (const auto& y : dit->second)
      if (!x.count(y))
        throw ValidationError("domain of " + p.group.show(gamma) + " leaves the space");
    // (P1): theta_gamma maps X_{-gamma} bijectively onto X_gamma
    const auto& source = p.domains.at(p.group.neg(gamma));
    const auto& theta = mit->second;
    if (theta.size() != source.size())
      throw ValidationError("(P1) fails at " + p.group.show(gamma));
    std::set<std::string> image;
    for (const auto& [y, z] : theta) {
      if (!source.count(y) || !dit->second.count(z) || !image.insert(z).second)
        throw ValidationError("(P1) fails at " + p.group.show(gamma));
    }
    if (image.size() != dit->second.size())
      throw ValidationError("(P1) fails at " + p.group.show(gamma));
  }
  if (p.domains.at(eps) != x)
    throw ValidationError("(P2) fails: X_e is not all of X");
  for (const auto& y : p.space)
    if (p.maps.at(eps).at(y) != y)
      throw ValidationError("(P2) fails: theta_e is not the identity");
  // (P2): theta_{gamma delta} extends theta_gamma . theta_delta
  for (const auto& gamma : p.group.elements())
    for (const auto& delta : p.group.elements()) {
      GroupElem gd = p.group.add(gamma, delta);
      for (const auto& z : p.domains.at(p.group.neg(delta))) {
        const std::string& y = p.maps.at(delta).at(z);
        if (!p.domains.at(p.group.neg(gamma)).count(y)) continue;
        if (!p.domains.at(p.group.neg(gd)).count(z) ||
            p.maps.at(gd).at(z) != p.maps.at(gamma).at(y))
          throw ValidationError("(P2) fails at gamma=" + p.group.show(gamma) +
                                " delta=" + p.group.show(delta));
      }
    }
}

Groupoid transformation_groupoid(const PartialAction& p) {
  validate_partial_action(p);
  Groupoid g;
  g.group = p.group;
  auto mid = [&](const std::string& x, const GroupElem& gamma, const std::string& y) {
    return x + "|" + p.group.show(gamma) + "|" + y;
  };
  struct Triple {
    std::string x;
    GroupElem gamma;
    std::string y;
  };
  std::vector<Triple> triples;
  for (const auto& gamma : p.group.elements())
    for (const auto& [y, x] : p.maps.at(gamma)) triples.push_back({x, gamma, y});
  for (const auto& t : triples) g.morphisms.push_back(mid(t.x, t.gamma, t.y));
  std::sort(g.morphisms.begin(), g.morphisms.end());
  GroupElem eps = p.group.identity();
  for (const auto& t : triples) {
    std::string id = mid(t.x, t.gamma, t.y);
    g.dom[id] = mid(t.y, eps, t.y);
    g.cod[id] = mid(t.x, eps, t.x);
    g.inv[id] = mid(t.y, p.group.neg(t.gamma), t.x);
    g.deg[id] = t.gamma;
    if (t.gamma == eps) g.units.insert(id);
  }
  for (const auto& a : triples)
    for (const auto& b : triples)
      if (a.y == b.x)
        g.comp[{mid(a.x, a.gamma, a.y), mid(b.x, b.gamma, b.y)}] =
            mid(a.x, p.group.add(a.gamma, b.gamma), b.y);
  GroupoidReport rep = validate_groupoid(g);
  if (!rep.valid)
    throw InternalInconsistency("transformation groupoid invalid: " + rep.violation);
  return g;
}

bool is_global(const PartialAction& p) {
  std::set<std::string> x(p.space.begin(), p.space.end());
  for (const auto& [gamma, dom] : p.domains)
    if (dom != x) return false;
  return true;
}

}  // namespace stg
