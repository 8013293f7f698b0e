#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "stg/errors.hpp"
#include "stg/steinberg.hpp"

using namespace stg;
using namespace stgtest;

namespace {

Groupoid swap_groupoid() {
  PartialAction p;
  p.group = AbelianGroup::zmod(2);
  p.space = {"a", "b"};
  p.domains[{0}] = {"a", "b"};
  p.domains[{1}] = {"a", "b"};
  p.maps[{0}] = {{"a", "a"}, {"b", "b"}};
  p.maps[{1}] = {{"a", "b"}, {"b", "a"}};
  return transformation_groupoid(p);
}

}  // namespace

TEST_CASE("group algebra of Z/2") {
  StructAlgebra a = steinberg_algebra(group_as_groupoid(AbelianGroup::zmod(2)));
  CHECK(validate_algebra(a).valid);
  REQUIRE(a.dim() == 2);
  size_t e = a.index("m(0)"), s = a.index("m(1)");
  CHECK(a.mult.at({s, s}).at(e) == 1);  // sigma^2 = epsilon
  CHECK(a.mult.at({e, s}).at(s) == 1);
  CHECK(a.deg[s] == GroupElem{1});
  REQUIRE(a.local_units.size() == 1);
  CHECK(a.local_units[0] == std::map<size_t, long long>{{e, 1}});
}

TEST_CASE("discrete two-unit groupoid gives R x R") {
  StructAlgebra a = steinberg_algebra(discrete_groupoid(AbelianGroup::zmod(2), 2));
  CHECK(validate_algebra(a).valid);
  REQUIRE(a.dim() == 2);
  CHECK(a.mult.count({0, 1}) == 0);  // orthogonal idempotents
  CHECK(a.mult.at({0, 0}).at(0) == 1);
  CHECK(a.mult.at({1, 1}).at(1) == 1);
}

TEST_CASE("invalid groupoids are rejected before conversion") {
  Groupoid g = group_as_groupoid(AbelianGroup::zmod(2));
  g.comp.erase({"m(1)", "m(1)"});
  CHECK_THROWS_AS(steinberg_algebra(g), ValidationError);
}

TEST_CASE("group algebra is strongly graded over both fields") {
  StructAlgebra a = steinberg_algebra(group_as_groupoid(AbelianGroup::zmod(2)));
  CHECK(strongly_graded_algebra_check(a, 0).yes());
  CHECK(strongly_graded_algebra_check(a, 2).yes());
}

TEST_CASE("trivially graded product algebra fails at sigma") {
  StructAlgebra a = steinberg_algebra(discrete_groupoid(AbelianGroup::zmod(2), 2));
  AlgebraGradingReport r = strongly_graded_algebra_check(a, 0);
  CHECK(!r.yes());
}

TEST_CASE("swap transformation groupoid algebra is strongly graded") {
  StructAlgebra a = steinberg_algebra(swap_groupoid());
  CHECK(a.dim() == 4);
  CHECK(validate_algebra(a).valid);
  CHECK(strongly_graded_algebra_check(a, 0).yes());
}

TEST_CASE("algebra verdict matches the groupoid verdict") {
  std::mt19937 rng(97);
  for (long long mod : {2, 3, 4}) {
    AbelianGroup grp = AbelianGroup::zmod(mod);
    for (int trial = 0; trial < 25; ++trial) {
      Groupoid g = random_groupoid(rng, grp, 6);
      bool gv = strong_grading_check(g).yes();
      StructAlgebra a = steinberg_algebra(g);
      CHECK(gv == strongly_graded_algebra_check(a, 0).yes());
      CHECK(gv == strongly_graded_algebra_check(a, 2).yes());
    }
  }
}

TEST_CASE("quotient and restriction factor the algebra verdict") {
  std::mt19937 rng(101);
  AbelianGroup z4 = AbelianGroup::zmod(4);
  Subgroup omega = make_subgroup(z4, {{2}});
  for (int trial = 0; trial < 30; ++trial) {
    StructAlgebra a = steinberg_algebra(random_groupoid(rng, z4, 6));
    bool whole = strongly_graded_algebra_check(a, 0).yes();
    bool quot =
        strongly_graded_algebra_check(regrade_algebra_quotient(a, omega), 0).yes();
    bool part = strongly_graded_algebra_check(restrict_algebra(a, omega), 0).yes();
    CHECK(whole == (quot && part));
  }
}

TEST_CASE("factorization of the unit through sigma twice") {
  Groupoid g = group_as_groupoid(AbelianGroup::zmod(2));
  IndicatorExpression e =
      inclusion_exclusion_factorization(g, {"m(0)"}, {1}, {1});
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].coeff == 1);
  CHECK(e.terms[0].v == std::set<std::string>{"m(1)"});
  CHECK(e.terms[0].w == std::set<std::string>{"m(1)"});
  auto value = evaluate_indicator_expression(g, e);
  CHECK(value == std::map<std::string, long long>{{"m(0)", 1}});
}

TEST_CASE("factorization of a unit through the identity") {
  Groupoid g = discrete_groupoid(AbelianGroup::zmod(2), 2);
  IndicatorExpression e =
      inclusion_exclusion_factorization(g, {"u0"}, {0}, {0});
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].v == std::set<std::string>{"u0"});
  CHECK(e.terms[0].w == std::set<std::string>{"u0"});
  auto value = evaluate_indicator_expression(g, e);
  CHECK(value == std::map<std::string, long long>{{"u0", 1}});
}

TEST_CASE("factorization of the whole unit space in the swap groupoid") {
  Groupoid g = swap_groupoid();
  std::set<std::string> units(g.units.begin(), g.units.end());
  IndicatorExpression e =
      inclusion_exclusion_factorization(g, units, {1}, {1});
  CHECK(e.terms.size() == 2);
  auto value = evaluate_indicator_expression(g, e);
  std::map<std::string, long long> want;
  for (const auto& u : units) want[u] = 1;
  CHECK(value == want);
}

TEST_CASE("unfactorable morphisms are reported") {
  Groupoid g = discrete_groupoid(AbelianGroup::zmod(2), 2);
  CHECK_THROWS_AS(inclusion_exclusion_factorization(g, {"u0"}, {1}, {1}),
                  DomainError);
}

TEST_CASE("non-bisections are rejected as factorization targets") {
  Groupoid g = swap_groupoid();
  std::set<std::string> all(g.morphisms.begin(), g.morphisms.end());
  CHECK_THROWS_AS(inclusion_exclusion_factorization(g, all, {1}, {1}),
                  DomainError);
}

TEST_CASE("factorizations re-evaluate on random strongly graded samples") {
  std::mt19937 rng(103);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    AbelianGroup grp = AbelianGroup::zmod(trial % 2 ? 2 : 3);
    Groupoid g = random_groupoid(rng, grp, 6);
    if (!strong_grading_check(g).yes()) continue;
    for (const auto& gamma : grp.elements())
      for (const auto& delta : grp.elements()) {
        // one-morphism homogeneous bisections of the product degree
        GroupElem total = grp.add(gamma, delta);
        for (const auto& m : g.morphisms) {
          if (!(g.deg.at(m) == total)) continue;
          IndicatorExpression e =
              inclusion_exclusion_factorization(g, {m}, gamma, delta);
          auto value = evaluate_indicator_expression(g, e);
          CHECK(value == std::map<std::string, long long>{{m, 1}});
          ++checked;
        }
      }
  }
  CHECK(checked > 50);
}

TEST_CASE("regular module over the group algebra passes the probe") {
  StructAlgebra a = steinberg_algebra(group_as_groupoid(AbelianGroup::zmod(2)));
  GradedModule m = shifted_regular_module(a, a.group.identity());
  CHECK(dade_natural_map_iso(a, m));
  CHECK(dade_eta_iso(a, m));
  DadeProbe p = dade_probe(a);
  CHECK(p.all_iso);
  CHECK(p.per_shift.size() == 2);
}

TEST_CASE("shifted module over a trivially graded algebra fails") {
  StructAlgebra a = steinberg_algebra(discrete_groupoid(AbelianGroup::zmod(2), 2));
  GradedModule shifted = shifted_regular_module(a, {1});
  CHECK(!dade_natural_map_iso(a, shifted));
  CHECK(dade_eta_iso(a, shifted));
  GradedModule plain = shifted_regular_module(a, {0});
  CHECK(dade_natural_map_iso(a, plain));
  DadeProbe p = dade_probe(a);
  CHECK(!p.all_iso);
}

TEST_CASE("the probe detects strong grading on samples") {
  std::mt19937 rng(107);
  for (long long mod : {2, 3}) {
    AbelianGroup grp = AbelianGroup::zmod(mod);
    for (int trial = 0; trial < 15; ++trial) {
      Groupoid g = random_groupoid(rng, grp, 6);
      StructAlgebra a = steinberg_algebra(g);
      bool strong = strong_grading_check(g).yes();
      DadeProbe p0 = dade_probe(a);
      DadeProbe p2 = dade_probe(a, 2);
      CHECK(p0.all_iso == strong);
      CHECK(p2.all_iso == strong);
      for (const auto& [shift, iso] : p0.per_shift) {
        (void)shift;
        if (strong) CHECK(iso);
      }
      GradedModule m = shifted_regular_module(a, grp.identity());
      CHECK(dade_eta_iso(a, m));
    }
  }
}
