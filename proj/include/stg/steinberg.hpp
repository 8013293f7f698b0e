#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stg/group.hpp"
#include "stg/groupoid.hpp"

namespace stg {

// Finite-dimensional graded algebra by structure constants over Z (mapped
// into Q or Z/p for linear algebra). Local units are stored as elements.
struct StructAlgebra {
  AbelianGroup group;
  std::vector<std::string> basis;
  std::map<std::pair<size_t, size_t>, std::map<size_t, long long>> mult;
  std::vector<GroupElem> deg;
  std::vector<std::map<size_t, long long>> local_units;

  size_t dim() const { return basis.size(); }
  size_t index(const std::string& b) const;
};

struct AlgebraReport {
  bool valid = true;
  std::string violation;
};

// Associativity on basis triples, degree additivity on nonzero products,
// local units idempotent and of identity degree.
AlgebraReport validate_algebra(const StructAlgebra& a);

// Convolution algebra on the singleton-morphism basis. Declared local units
// are the singleton unit indicators; sums of them recover every unit-subset
// indicator, so span checks against singletons decide the general case.
StructAlgebra steinberg_algebra(const Groupoid& g);

struct AlgebraGradingReport {
  bool units_in_products = true;  // local units inside span(A_gamma A_{-gamma})
  bool components_fill = true;    // span(A_gamma A_delta) = A_{gamma+delta}
  std::string failure;
  bool yes() const { return units_in_products && components_fill; }
};

// p = 0 works over Q, p > 0 over Z/p.
AlgebraGradingReport strongly_graded_algebra_check(const StructAlgebra& a,
                                                   const std::vector<GroupElem>& degrees,
                                                   long long p = 0);
AlgebraGradingReport strongly_graded_algebra_check(const StructAlgebra& a,
                                                   long long p = 0);

// Quotient regrading of the algebra (degrees pushed to the quotient group)
// and the subalgebra spanned by degrees in omega, graded by omega.
StructAlgebra regrade_algebra_quotient(const StructAlgebra& a, const Subgroup& omega);
StructAlgebra restrict_algebra(const StructAlgebra& a, const Subgroup& omega);

// Signed sum of convolution products of morphism subsets.
struct IndicatorTerm {
  long long coeff = 1;
  std::set<std::string> v, w;
};
struct IndicatorExpression {
  std::vector<IndicatorTerm> terms;
};

// Writes 1_U as a signed sum of products 1_V * 1_W with V, W homogeneous of
// degrees gamma, delta, following the singleton-factorisation cover.
// Throws DomainError with the unfactorable morphism if none exists.
IndicatorExpression inclusion_exclusion_factorization(const Groupoid& g,
                                                      const std::set<std::string>& u,
                                                      const GroupElem& gamma,
                                                      const GroupElem& delta);

// Evaluates the expression by convolution; result maps morphism -> coefficient.
std::map<std::string, long long> evaluate_indicator_expression(
    const Groupoid& g, const IndicatorExpression& e);

// Right module over a StructAlgebra with graded basis.
struct GradedModule {
  std::vector<std::string> basis;
  std::vector<GroupElem> deg;
  // action[(m_i, a_j)] = coefficients of m_i . a_j
  std::map<std::pair<size_t, size_t>, std::map<size_t, long long>> action;
};

// The regular module shifted by alpha: same basis as A, basis element of
// degree d sits in degree d - alpha.
GradedModule shifted_regular_module(const StructAlgebra& a, const GroupElem& alpha);

// Natural map M_e (x)_{A_e} A -> M, m (x) a -> ma; true iff bijective.
bool dade_natural_map_iso(const StructAlgebra& a, const GradedModule& m, long long p = 0);

// Companion map N (x)_{A_e} A_e -> N for N = M_e; an isomorphism always.
bool dade_eta_iso(const StructAlgebra& a, const GradedModule& m, long long p = 0);

struct DadeProbe {
  bool all_iso = true;
  std::vector<std::pair<GroupElem, bool>> per_shift;
};

DadeProbe dade_probe(const StructAlgebra& a, long long p = 0);

}  // namespace stg
