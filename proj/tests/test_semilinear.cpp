#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "stg/errors.hpp"
#include "stg/semilinear.hpp"

using namespace stg;
using namespace stgtest;

namespace {

// Reference path counter: does any core path of length n end at v?
bool brute_receives(const Graph& g, const std::string& v, long long n) {
  std::set<std::string> cur{v};
  for (long long i = 0; i < n; ++i) {
    std::set<std::string> prev;
    for (const auto& e : g.edges)
      if (cur.count(e.rng)) prev.insert(e.src);
    cur = std::move(prev);
    if (cur.empty()) return false;
  }
  return !cur.empty();
}

}  // namespace

TEST_CASE("loop spectrum is all of N") {
  SemilinearSet s = length_spectrum(loop_graph(), "v");
  CHECK(s == SemilinearSet::all_naturals());
  for (long long n = 0; n < 40; ++n) CHECK(s.membership(n));
  CHECK(!s.misses_infinitely_many());
}

TEST_CASE("single edge spectrum is {0,1}") {
  SemilinearSet s = length_spectrum(sink_graph(), "v");
  CHECK(s.membership(0));
  CHECK(s.membership(1));
  CHECK(!s.membership(2));
  CHECK(s.misses_infinitely_many());
  CHECK(s == SemilinearSet::from_parts({0, 1}, {}));
}

TEST_CASE("2-cycle spectrum is all of N") {
  Graph g = make_graph({"u", "v"}, {{"a", "u", "v"}, {"b", "v", "u"}});
  SemilinearSet s = length_spectrum(g, "u");
  for (long long n = 0; n <= 10; ++n) CHECK(s.membership(n));
  CHECK(s == SemilinearSet::all_naturals());
}

TEST_CASE("spectrum always contains 0 and matches brute force") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, 4);
    SpectrumFamily fam = all_length_spectra(g);
    for (const auto& v : g.vertices) {
      SemilinearSet s = length_spectrum(g, v);
      CHECK(s.membership(0));
      CHECK(s == fam.spectra.at(v));
      for (long long n = 0; n <= 30; ++n)
        CHECK(s.membership(n) == brute_receives(g, v, n));
    }
  }
}

TEST_CASE("spectrum of a non-core vertex is refused") {
  CHECK_THROWS_AS(length_spectrum(loop_graph(), "w"), DomainError);
}

TEST_CASE("shift_by moves the whole set") {
  SemilinearSet s = SemilinearSet::from_parts({0, 1}, {});
  SemilinearSet t = s.shift_by(2);
  CHECK(t == SemilinearSet::from_parts({2, 3}, {}));
  CHECK(!t.membership(0));
  CHECK(t.membership(2));
  CHECK(t.membership(3));
  CHECK(!t.membership(4));
}

TEST_CASE("union of evens and odds is N") {
  SemilinearSet evens = SemilinearSet::from_parts({}, {{0, 2}});
  SemilinearSet odds = SemilinearSet::from_parts({}, {{1, 2}});
  CHECK(evens.union_with(odds) == SemilinearSet::all_naturals());
  CHECK(evens.misses_infinitely_many());
  CHECK(odds.misses_infinitely_many());
}

TEST_CASE("empty set and canonical equality") {
  SemilinearSet e = SemilinearSet::empty_set();
  CHECK(e.is_empty());
  CHECK(e.misses_infinitely_many());
  // same set through different presentations
  SemilinearSet a = SemilinearSet::from_parts({0, 2}, {{4, 2}});
  SemilinearSet b = SemilinearSet::from_parts({}, {{0, 2}});
  CHECK(a == b);
  SemilinearSet c = SemilinearSet::from_word({true, false, true, false}, 2, 2);
  CHECK(c == b);
}

TEST_CASE("operations respect membership pointwise") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long long> off(0, 5), per(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    SemilinearSet a = SemilinearSet::from_parts({off(rng)}, {{off(rng), per(rng)}});
    SemilinearSet b = SemilinearSet::from_parts({}, {{off(rng), per(rng)}});
    SemilinearSet u = a.union_with(b);
    long long c = off(rng);
    SemilinearSet sh = a.shift_by(c);
    for (long long n = 0; n <= 40; ++n) {
      CHECK(u.membership(n) == (a.membership(n) || b.membership(n)));
      CHECK(sh.membership(n) == (n >= c && a.membership(n - c)));
    }
  }
}

TEST_CASE("grid periodic family folds saturated coordinates") {
  GridPeriodicFamily fam;
  fam.dimension = 2;
  fam.preperiod = {1, 0};
  fam.period = {2, 1};
  fam.table[{0, 0}] = {"a"};
  fam.table[{1, 0}] = {"b"};
  fam.table[{2, 0}] = {"c"};
  CHECK(fam.fold({0, 0}) == std::vector<long long>({0, 0}));
  CHECK(fam.fold({3, 7}) == std::vector<long long>({1, 0}));
  CHECK(fam.fold({4, 2}) == std::vector<long long>({2, 0}));
  CHECK(fam.value({6, 1}) == std::set<std::string>{"c"});
}
