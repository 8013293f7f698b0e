#include "stg/semilinear.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stg/errors.hpp"

namespace stg {

SemilinearSet SemilinearSet::from_word(std::vector<bool> bits, long long n0, long long p) {
  if (p < 1 || n0 < 0 || static_cast<long long>(bits.size()) != n0 + p)
    throw DomainError("malformed characteristic word");
  SemilinearSet s;
  s.bits_ = std::move(bits);
  s.n0_ = n0;
  s.p_ = p;
  return s;
}

SemilinearSet SemilinearSet::from_parts(
    const std::set<long long>& sporadic,
    const std::vector<std::pair<long long, long long>>& progressions) {
  long long n0 = 0;
  for (long long n : sporadic) {
    if (n < 0) throw DomainError("negative element");
    n0 = std::max(n0, n + 1);
  }
  long long p = 1;
  for (const auto& [a, q] : progressions) {
    if (a < 0 || q < 1) throw DomainError("malformed progression");
    n0 = std::max(n0, a);
    p = std::lcm(p, q);
  }
  std::vector<bool> bits(n0 + p, false);
  for (long long n : sporadic) bits[n] = true;
  for (const auto& [a, q] : progressions)
    for (long long n = a; n < n0 + p; n += q) bits[n] = true;
  return from_word(std::move(bits), n0, p);
}

SemilinearSet SemilinearSet::empty_set() { return from_word({false}, 0, 1); }
SemilinearSet SemilinearSet::all_naturals() { return from_word({true}, 0, 1); }

bool SemilinearSet::membership(long long n) const {
  if (n < 0) return false;
  if (n < n0_ + p_) return bits_[n];
  return bits_[n0_ + (n - n0_) % p_];
}

SemilinearSet SemilinearSet::union_with(const SemilinearSet& o) const {
  long long n0 = std::max(n0_, o.n0_);
  long long p = std::lcm(p_, o.p_);
  std::vector<bool> bits(n0 + p);
  for (long long n = 0; n < n0 + p; ++n)
    bits[n] = membership(n) || o.membership(n);
  return from_word(std::move(bits), n0, p);
}

SemilinearSet SemilinearSet::shift_by(long long c) const {
  if (c < 0) throw DomainError("negative shift");
  std::vector<bool> bits(n0_ + c + p_);
  for (long long n = 0; n < n0_ + c + p_; ++n)
    bits[n] = n >= c && membership(n - c);
  return from_word(std::move(bits), n0_ + c, p_);
}

bool SemilinearSet::misses_infinitely_many() const {
  for (long long r = 0; r < p_; ++r)
    if (!bits_[n0_ + r]) return true;
  return false;
}

bool SemilinearSet::is_empty() const {
  return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

bool SemilinearSet::operator==(const SemilinearSet& o) const {
  long long n0 = std::max(n0_, o.n0_);
  long long p = std::lcm(p_, o.p_);
  for (long long n = 0; n < n0 + p; ++n)
    if (membership(n) != o.membership(n)) return false;
  return true;
}

std::string SemilinearSet::show() const {
  std::ostringstream os;
  os << "word=";
  for (bool b : bits_) os << (b ? '1' : '0');
  os << " preperiod=" << n0_ << " period=" << p_;
  return os.str();
}

SpectrumFamily all_length_spectra(const Graph& g) {
  // iterate the receives-a-path-of-length-n boolean vector until it repeats
  std::vector<std::string> verts = g.vertices;
  std::sort(verts.begin(), verts.end());
  std::map<std::string, size_t> idx;
  for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = i;

  std::vector<std::vector<bool>> steps;
  std::map<std::vector<bool>, size_t> seen;
  std::vector<bool> cur(verts.size(), true);  // length 0: trivial path
  long long start = -1;
  const long long cap = max_enumeration_size();
  while (true) {
    auto [it, fresh] = seen.emplace(cur, steps.size());
    if (!fresh) {
      start = static_cast<long long>(it->second);
      break;
    }
    steps.push_back(cur);
    if (static_cast<long long>(steps.size()) > cap)
      throw ResourceError("spectrum iteration exceeds cap");
    std::vector<bool> next(verts.size(), false);
    for (const auto& e : g.edges)
      if (cur[idx.at(e.src)]) next[idx.at(e.rng)] = true;
    cur = std::move(next);
  }
  long long n0 = start;
  long long p = static_cast<long long>(steps.size()) - start;

  SpectrumFamily fam;
  fam.preperiod = n0;
  fam.period = p;
  for (const auto& v : verts) {
    std::vector<bool> bits(n0 + p);
    for (long long n = 0; n < n0 + p; ++n) bits[n] = steps[n][idx.at(v)];
    fam.spectra.emplace(v, SemilinearSet::from_word(std::move(bits), n0, p));
  }
  return fam;
}

SemilinearSet length_spectrum(const Graph& g, const std::string& v) {
  if (!g.has_vertex(v)) throw DomainError("unknown vertex '" + v + "'");
  return all_length_spectra(g).spectra.at(v);
}

std::vector<long long> GridPeriodicFamily::fold(std::vector<long long> m) const {
  if (static_cast<int>(m.size()) != dimension)
    throw DomainError("wrong grid dimension");
  for (int i = 0; i < dimension; ++i) {
    if (m[i] < 0) throw DomainError("negative grid coordinate");
    if (m[i] >= preperiod[i])
      m[i] = preperiod[i] + (m[i] - preperiod[i]) % period[i];
  }
  return m;
}

const std::set<std::string>& GridPeriodicFamily::value(
    const std::vector<long long>& m) const {
  return table.at(fold(m));
}

}  // namespace stg
