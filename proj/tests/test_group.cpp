#include <doctest.h>

#include <random>

#include "stg/errors.hpp"
#include "stg/group.hpp"

using namespace stg;

TEST_CASE("cyclic group arithmetic") {
  AbelianGroup g = AbelianGroup::zmod(4);
  CHECK(g.order() == 4);
  CHECK(g.is_finite());
  CHECK(g.reduce({7}) == GroupElem{3});
  CHECK(g.reduce({-1}) == GroupElem{3});
  CHECK(g.add({2}, {3}) == GroupElem{1});
  CHECK(g.neg({1}) == GroupElem{3});
  CHECK(g.is_identity(g.add({2}, {2})));
  CHECK(g.elem_order({2}) == 2);
  CHECK(g.elem_order({1}) == 4);
  CHECK(g.elements().size() == 4);
}

TEST_CASE("free group arithmetic") {
  AbelianGroup g = AbelianGroup::z(2);
  CHECK(!g.is_finite());
  CHECK_THROWS_AS(g.order(), DomainError);
  CHECK(g.add({1, -2}, {3, 5}) == GroupElem({4, 3}));
  CHECK(g.elem_order({0, 0}) == 1);
  CHECK(g.elem_order({1, 0}) == 0);  // infinite
}

TEST_CASE("mixed moduli reduce coordinatewise") {
  AbelianGroup g({0, 3});
  CHECK(g.reduce({-2, 5}) == GroupElem({-2, 2}));
  CHECK(g.sub({0, 1}, {1, 2}) == GroupElem({-1, 2}));
}

TEST_CASE("subgroup closure") {
  AbelianGroup g = AbelianGroup::zmod(4);
  Subgroup omega = make_subgroup(g, {{2}});
  REQUIRE(omega.elements.size() == 2);
  CHECK(omega.elements[0] == GroupElem{0});
  CHECK(omega.elements[1] == GroupElem{2});
}

TEST_CASE("subgroup presentation of the even part of Z/4") {
  AbelianGroup g = AbelianGroup::zmod(4);
  Subgroup omega = make_subgroup(g, {{2}});
  Presentation p = present_subgroup(g, omega);
  CHECK(p.group.order() == 2);
  CHECK(p.coords.at({0}) == p.group.identity());
  CHECK(!p.group.is_identity(p.coords.at({2})));
}

TEST_CASE("quotient presentation Z/4 by {0,2}") {
  AbelianGroup g = AbelianGroup::zmod(4);
  Subgroup omega = make_subgroup(g, {{2}});
  Presentation p = present_quotient(g, omega);
  CHECK(p.group.order() == 2);
  CHECK(p.coords.at({0}) == p.coords.at({2}));
  CHECK(p.coords.at({1}) == p.coords.at({3}));
  CHECK(p.coords.at({0}) != p.coords.at({1}));
}

TEST_CASE("quotient of Z/2 x Z/2 by the diagonal") {
  AbelianGroup g({2, 2});
  Subgroup diag = make_subgroup(g, {{1, 1}});
  Presentation p = present_quotient(g, diag);
  CHECK(p.group.order() == 2);
  CHECK(p.coords.at({1, 0}) == p.coords.at({0, 1}));
  CHECK(p.coords.at({0, 0}) != p.coords.at({1, 0}));
}

TEST_CASE("presentation coordinates are homomorphisms") {
  std::mt19937 rng(7);
  std::vector<AbelianGroup> groups = {AbelianGroup::zmod(4), AbelianGroup({2, 2}),
                                      AbelianGroup({2, 4}), AbelianGroup::zmod(6)};
  for (const auto& g : groups) {
    auto elems = g.elements();
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    // every cyclic subgroup of the group
    for (const auto& gen : elems) {
      Subgroup omega = make_subgroup(g, {gen});
      Presentation sub = present_subgroup(g, omega);
      Presentation quo = present_quotient(g, omega);
      CHECK(sub.group.order() == static_cast<long long>(omega.elements.size()));
      CHECK(quo.group.order() * sub.group.order() == g.order());
      for (int t = 0; t < 20; ++t) {
        GroupElem a = elems[pick(rng)], b = elems[pick(rng)];
        GroupElem ab = g.add(a, b);
        CHECK(quo.coords.at(ab) ==
              quo.group.add(quo.coords.at(a), quo.coords.at(b)));
      }
      for (const auto& a : omega.elements)
        for (const auto& b : omega.elements)
          CHECK(sub.coords.at(g.add(a, b)) ==
                sub.group.add(sub.coords.at(a), sub.coords.at(b)));
    }
  }
}

TEST_CASE("non-closed element list is rejected") {
  AbelianGroup g = AbelianGroup::zmod(4);
  CHECK(make_subgroup(g, {{1}}).elements.size() == 4);  // closure of a generator
  CHECK_THROWS_AS(make_subgroup(AbelianGroup::z(1), {{1}}), DomainError);
}
