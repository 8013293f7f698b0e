#include "stg/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "stg/errors.hpp"

namespace stg {

AbelianGroup::AbelianGroup(std::vector<long long> moduli) : moduli_(std::move(moduli)) {
  for (long long m : moduli_)
    if (m < 0) throw ValidationError("group modulus must be >= 0");
}

AbelianGroup AbelianGroup::z(int rank) {
  if (rank < 1) throw ValidationError("Z^k needs k >= 1");
  return AbelianGroup(std::vector<long long>(rank, 0));
}

AbelianGroup AbelianGroup::zmod(long long n) {
  if (n < 1) throw ValidationError("Z/n needs n >= 1");
  return AbelianGroup({n});
}

AbelianGroup AbelianGroup::trivial() { return AbelianGroup({1}); }

bool AbelianGroup::is_finite() const {
  return std::all_of(moduli_.begin(), moduli_.end(), [](long long m) { return m != 0; });
}

long long AbelianGroup::order() const {
  if (!is_finite()) throw DomainError("infinite group has no order");
  long long n = 1;
  for (long long m : moduli_) n *= m;
  return n;
}

GroupElem AbelianGroup::identity() const { return GroupElem(moduli_.size(), 0); }

GroupElem AbelianGroup::reduce(GroupElem x) const {
  if (x.size() != moduli_.size()) throw DomainError("group element has wrong rank");
  for (size_t i = 0; i < x.size(); ++i)
    if (moduli_[i] != 0) x[i] = ((x[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
  return x;
}

GroupElem AbelianGroup::add(const GroupElem& a, const GroupElem& b) const {
  if (a.size() != moduli_.size() || b.size() != moduli_.size())
    throw DomainError("group element has wrong rank");
  GroupElem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return reduce(std::move(r));
}

GroupElem AbelianGroup::neg(const GroupElem& a) const {
  GroupElem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return reduce(std::move(r));
}

GroupElem AbelianGroup::sub(const GroupElem& a, const GroupElem& b) const {
  return add(a, neg(b));
}

bool AbelianGroup::is_identity(const GroupElem& a) const {
  GroupElem r = reduce(a);
  return std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; });
}

long long AbelianGroup::elem_order(const GroupElem& a) const {
  GroupElem r = reduce(a);
  for (size_t i = 0; i < r.size(); ++i)
    if (moduli_[i] == 0 && r[i] != 0) return 0;
  long long o = 1;
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    long long g = std::gcd(r[i], moduli_[i]);
    o = std::lcm(o, moduli_[i] / g);
  }
  return o;
}

std::vector<GroupElem> AbelianGroup::elements() const {
  if (!is_finite()) throw DomainError("cannot enumerate an infinite group");
  std::vector<GroupElem> out;
  GroupElem cur = identity();
  while (true) {
    out.push_back(cur);
    int i = rank() - 1;
    for (; i >= 0; --i) {
      if (++cur[i] < moduli_[i]) break;
      cur[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

std::string AbelianGroup::show(const GroupElem& a) const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

std::string AbelianGroup::show() const {
  std::ostringstream os;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    if (i) os << " x ";
    if (moduli_[i] == 0)
      os << "Z";
    else
      os << "Z/" << moduli_[i];
  }
  if (moduli_.empty()) os << "0";
  return os.str();
}

Subgroup make_subgroup(const AbelianGroup& g, std::vector<GroupElem> gens) {
  if (!g.is_finite()) throw DomainError("subgroups are supported for finite groups only");
  std::set<GroupElem> closed;
  closed.insert(g.identity());
  for (auto& x : gens) closed.insert(g.reduce(x));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElem> cur(closed.begin(), closed.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (closed.insert(g.add(a, b)).second) grew = true;
  }
  Subgroup s;
  s.elements.assign(closed.begin(), closed.end());
  return s;
}

namespace {

// Invariant factors of a finite abelian black-box group.
// Elements must be closed; ops are supplied by the caller.
struct BlackBox {
  std::vector<GroupElem> elems;  // sorted canonical representatives
  std::function<GroupElem(const GroupElem&, const GroupElem&)> add;
  std::function<GroupElem(const GroupElem&)> neg;
  GroupElem zero;
};

long long bb_order(const BlackBox& g, const GroupElem& a) {
  long long o = 1;
  GroupElem x = a;
  while (x != g.zero) {
    x = g.add(x, a);
    ++o;
  }
  return o;
}

// Returns moduli (invariant factors, largest first) and coordinates of every
// element. Decomposition by splitting off a maximal-order cyclic factor and
// recursing on the quotient, with the standard lift correction.
void bb_decompose(const BlackBox& g, std::vector<long long>& moduli,
                  std::map<GroupElem, GroupElem>& coords) {
  if (g.elems.size() == 1) {
    moduli = {1};
    coords[g.zero] = {0};
    return;
  }
  // element of maximal order
  GroupElem a = g.zero;
  long long m = 1;
  for (const auto& e : g.elems) {
    long long o = bb_order(g, e);
    if (o > m) {
      m = o;
      a = e;
    }
  }
  // cyclic subgroup <a> and exponent lookup
  std::map<GroupElem, long long> exp_in_a;
  {
    GroupElem x = g.zero;
    for (long long j = 0; j < m; ++j) {
      exp_in_a[x] = j;
      x = g.add(x, a);
    }
  }
  if (static_cast<long long>(g.elems.size()) == m) {
    moduli = {m};
    for (const auto& e : g.elems) coords[e] = {exp_in_a.at(e)};
    return;
  }
  // quotient by <a>: canonical rep = least element of each coset
  std::map<GroupElem, GroupElem> rep_of;
  for (const auto& e : g.elems) {
    GroupElem best = e, x = e;
    for (long long j = 1; j < m; ++j) {
      x = g.add(x, a);
      best = std::min(best, x);
    }
    rep_of[e] = best;
  }
  std::set<GroupElem> reps_set;
  for (const auto& [e, r] : rep_of) reps_set.insert(r);
  BlackBox q;
  q.elems.assign(reps_set.begin(), reps_set.end());
  q.zero = rep_of.at(g.zero);
  q.add = [&g, &rep_of](const GroupElem& x, const GroupElem& y) {
    return rep_of.at(g.add(x, y));
  };
  q.neg = [&g, &rep_of](const GroupElem& x) { return rep_of.at(g.neg(x)); };

  std::vector<long long> qmod;
  std::map<GroupElem, GroupElem> qcoords;
  bb_decompose(q, qmod, qcoords);

  // lift quotient generators b_i with order(b_i) == qmod[i]
  // generator i of the quotient = the element with coords e_i
  std::vector<GroupElem> lifts;
  for (size_t i = 0; i < qmod.size(); ++i) {
    GroupElem target(qmod.size(), 0);
    target[i] = qmod[i] == 1 ? 0 : 1;
    GroupElem bq = q.zero;
    for (const auto& [r, c] : qcoords)
      if (c == target) {
        bq = r;
        break;
      }
    // bq is its own lift candidate; correct so its order matches qmod[i]
    GroupElem b = bq;
    long long mi = qmod[i];
    GroupElem mib = g.zero;
    for (long long j = 0; j < mi; ++j) mib = g.add(mib, b);
    long long t = exp_in_a.at(mib);  // mi * b = t * a, and mi | t
    long long corr = (t / mi) % m;
    GroupElem na = g.neg(a);
    for (long long j = 0; j < corr; ++j) b = g.add(b, na);
    lifts.push_back(b);
  }

  moduli.clear();
  moduli.push_back(m);
  for (long long f : qmod)
    if (f > 1) moduli.push_back(f);

  // coordinates: quotient coords give the lift part; the remainder is in <a>
  for (const auto& e : g.elems) {
    GroupElem qc = qcoords.at(rep_of.at(e));
    GroupElem liftpart = g.zero;
    GroupElem c;
    for (size_t i = 0; i < qmod.size(); ++i) {
      GroupElem term = g.zero;
      for (long long j = 0; j < qc[i]; ++j) term = g.add(term, lifts[i]);
      liftpart = g.add(liftpart, term);
    }
    GroupElem rem = g.add(e, g.neg(liftpart));
    c.push_back(exp_in_a.at(rem));
    for (size_t i = 0; i < qmod.size(); ++i)
      if (qmod[i] > 1) c.push_back(qc[i]);
    coords[e] = c;
  }
}

Presentation present_blackbox(BlackBox g) {
  std::vector<long long> moduli;
  std::map<GroupElem, GroupElem> coords;
  bb_decompose(g, moduli, coords);
  Presentation p;
  p.group = AbelianGroup(moduli);
  p.coords = std::move(coords);
  return p;
}

}  // namespace

Presentation present_subgroup(const AbelianGroup& g, const Subgroup& omega) {
  BlackBox bb;
  bb.elems = omega.elements;
  bb.zero = g.identity();
  bb.add = [&g](const GroupElem& a, const GroupElem& b) { return g.add(a, b); };
  bb.neg = [&g](const GroupElem& a) { return g.neg(a); };
  return present_blackbox(std::move(bb));
}

Presentation present_quotient(const AbelianGroup& g, const Subgroup& omega) {
  if (!g.is_finite()) throw DomainError("quotients are supported for finite groups only");
  std::map<GroupElem, GroupElem> rep_of;
  for (const auto& e : g.elements()) {
    GroupElem best = e;
    for (const auto& w : omega.elements) best = std::min(best, g.add(e, w));
    rep_of[e] = best;
  }
  std::set<GroupElem> reps;
  for (const auto& [e, r] : rep_of) reps.insert(r);
  BlackBox bb;
  bb.elems.assign(reps.begin(), reps.end());
  bb.zero = rep_of.at(g.identity());
  bb.add = [&g, rep_of](const GroupElem& a, const GroupElem& b) {
    return rep_of.at(g.add(a, b));
  };
  bb.neg = [&g, rep_of](const GroupElem& a) { return rep_of.at(g.neg(a)); };
  Presentation p = present_blackbox(bb);
  // extend coords from coset reps to all of G
  Presentation full;
  full.group = p.group;
  for (const auto& [e, r] : rep_of) full.coords[e] = p.coords.at(r);
  return full;
}

}  // namespace stg
