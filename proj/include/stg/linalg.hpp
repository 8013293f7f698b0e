#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "stg/errors.hpp"

namespace stg {

using Rational = boost::multiprecision::cpp_rational;

// Prime field with runtime modulus. Value is kept reduced to [0, p).
class Fp {
 public:
  Fp() : p_(2), v_(0) {}
  Fp(long long p, long long v) : p_(p), v_(((v % p) + p) % p) {}
  long long modulus() const { return p_; }
  long long value() const { return v_; }
  Fp operator+(const Fp& o) const { return Fp(p_, v_ + o.v_); }
  Fp operator-(const Fp& o) const { return Fp(p_, v_ - o.v_); }
  Fp operator*(const Fp& o) const { return Fp(p_, v_ * o.v_); }
  Fp operator-() const { return Fp(p_, -v_); }
  Fp inv() const {
    long long t = 0, nt = 1, r = p_, nr = v_;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw DomainError("not invertible mod p");
    return Fp(p_, t);
  }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return v_ != o.v_; }

 private:
  long long p_;
  long long v_;
};

// Field constants derived from a live element so runtime-modulus fields work.
template <class F>
F field_zero(const F& x) { return x - x; }
template <class F>
bool field_is_zero(const F& x) { return x == field_zero(x); }

// Incremental span over a field. Vectors are sparse coordinate maps indexed
// by size_t. Rows are kept in reduced echelon form keyed by pivot column.
template <class F>
class SpanSolver {
 public:
  using Vec = std::map<size_t, F>;

  // Reduces v against the current basis; returns the residue.
  Vec reduce(Vec v) const {
    for (const auto& [piv, row] : rows_) {
      auto it = v.find(piv);
      if (it == v.end()) continue;
      F c = it->second;
      for (const auto& [j, x] : row) {
        auto jt = v.find(j);
        F nv = (jt == v.end() ? field_zero(c) : jt->second) - c * x;
        if (field_is_zero(nv))
          v.erase(j);
        else
          v[j] = nv;
      }
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  // Adds v to the span; returns true if the span grew.
  bool add(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    size_t piv = v.begin()->first;
    F lead = v.begin()->second;
    F inv = (lead / lead) / lead;
    for (auto& [j, x] : v) x = x * inv;
    for (auto& [p2, row] : rows_) {
      auto it = row.find(piv);
      if (it == row.end()) continue;
      F c = it->second;
      for (const auto& [j, x] : v) {
        auto jt = row.find(j);
        F nv = (jt == row.end() ? field_zero(c) : jt->second) - c * x;
        if (field_is_zero(nv))
          row.erase(j);
        else
          row[j] = nv;
      }
    }
    rows_.emplace(piv, std::move(v));
    return true;
  }

  size_t rank() const { return rows_.size(); }

 private:
  std::map<size_t, Vec> rows_;
};

}  // namespace stg
