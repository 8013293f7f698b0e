#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace stg {

// Finitely presented abelian group: a product of cyclic factors.
// moduli[i] == 0 means a Z factor, moduli[i] == n >= 1 means Z/n.
// Elements are coordinate vectors reduced mod the moduli.
using GroupElem = std::vector<long long>;

class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<long long> moduli);

  static AbelianGroup z(int rank);           // Z^rank
  static AbelianGroup zmod(long long n);     // Z/n
  static AbelianGroup trivial();             // Z/1

  const std::vector<long long>& moduli() const { return moduli_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  bool is_finite() const;
  long long order() const;  // throws DomainError if infinite

  GroupElem identity() const;
  GroupElem reduce(GroupElem x) const;
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem sub(const GroupElem& a, const GroupElem& b) const;
  bool is_identity(const GroupElem& a) const;
  long long elem_order(const GroupElem& a) const;  // 0 = infinite

  // All elements of a finite group, lexicographically ordered.
  std::vector<GroupElem> elements() const;

  std::string show(const GroupElem& a) const;
  std::string show() const;

  bool operator==(const AbelianGroup& o) const { return moduli_ == o.moduli_; }

 private:
  std::vector<long long> moduli_;
};

// A subgroup of a finite AbelianGroup, given by its element list.
struct Subgroup {
  std::vector<GroupElem> elements;  // sorted, closed under + and -
};

// Validates closure and membership; throws DomainError on failure.
Subgroup make_subgroup(const AbelianGroup& g, std::vector<GroupElem> gens_or_elems);

// Presentation of a finite abelian group handed to us as a black box.
// `coords` maps each element to its coordinates in the presented group.
struct Presentation {
  AbelianGroup group;
  std::map<GroupElem, GroupElem> coords;
};

// Invariant-factor presentation of the subgroup itself (omega graded by Omega).
Presentation present_subgroup(const AbelianGroup& g, const Subgroup& omega);

// Invariant-factor presentation of the quotient G/Omega. `coords` maps each
// element of G to the coordinates of its coset.
Presentation present_quotient(const AbelianGroup& g, const Subgroup& omega);

}  // namespace stg
