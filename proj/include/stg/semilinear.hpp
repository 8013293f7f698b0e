#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stg/graph.hpp"

namespace stg {

// Eventually periodic subset of N in canonical form: membership on
// [0, preperiod) is explicit, and for n >= preperiod it depends only on
// (n - preperiod) mod period.
class SemilinearSet {
 public:
  // From explicit data: finite sporadic part plus progressions {a + j p}.
  static SemilinearSet from_parts(const std::set<long long>& sporadic,
                                  const std::vector<std::pair<long long, long long>>& progressions);
  // From a characteristic word: bits[n] for n < N0 + P, periodic after N0.
  static SemilinearSet from_word(std::vector<bool> bits, long long n0, long long p);
  static SemilinearSet empty_set();
  static SemilinearSet all_naturals();

  bool membership(long long n) const;
  SemilinearSet union_with(const SemilinearSet& o) const;
  SemilinearSet shift_by(long long c) const;
  bool misses_infinitely_many() const;
  bool is_empty() const;
  bool operator==(const SemilinearSet& o) const;

  long long preperiod() const { return n0_; }
  long long period() const { return p_; }
  std::string show() const;

 private:
  SemilinearSet() = default;
  std::vector<bool> bits_;  // length n0_ + p_
  long long n0_ = 0;
  long long p_ = 1;
};

// {n : some core path of length n ends at v}; always contains 0.
SemilinearSet length_spectrum(const Graph& g, const std::string& v);

// Length spectra of every core vertex at once, sharing one (preperiod,
// period) pair. spectra[v].membership agrees with length_spectrum(g, v).
struct SpectrumFamily {
  long long preperiod = 0;
  long long period = 1;
  std::map<std::string, SemilinearSet> spectra;
};
SpectrumFamily all_length_spectra(const Graph& g);

// Grid-periodic family over N^k: value(m) for m in the folded representative
// box determines value everywhere via per-axis folding.
struct GridPeriodicFamily {
  int dimension = 0;
  std::vector<long long> preperiod;  // N_i
  std::vector<long long> period;     // P_i >= 1
  std::map<std::vector<long long>, std::set<std::string>> table;

  std::vector<long long> fold(std::vector<long long> m) const;
  const std::set<std::string>& value(const std::vector<long long>& m) const;
};

}  // namespace stg
