#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eucalc/calculus.hpp"
#include "eucalc/model.hpp"
#include "eucalc/types.hpp"

namespace eucalc {

/// Basis-change matrix M(i, j) = Eu(cl V_j, V_i) in the canonical stratum
/// order, together with the characteristic-cycle coefficient of each basis
/// column. Unit upper triangular, hence unimodular over the integers.
struct EuTable {
  IntMatrix M;
  IntVector cc_sign;  // (-1)^dim per stratum; CC(Eu(cl V_j, .)) = cc_sign[j] * conormal of V_j
  bool unit_triangular() const;
};

/// Eu(cl V_j, .) on all strata: the hyperplane-section recursion driven by
/// the generic covector's closed sections, descending from E[j] = 1 and
/// vanishing off cl V_j. Requires a valid model.
ConstructibleFunction eu_function(const GermModel& m, Index j);
ConstructibleFunction eu_function(const GermModel& m, std::string_view id);

EuTable eu_table(const GermModel& m);

/// Euler obstruction of the whole germ, as the sum of the basis columns of
/// the maximal strata: Eu(X, V_i) = sum over maximal j of M(i, j).
ConstructibleFunction whole_germ_eu(const GermModel& m);

/// Coordinates of a in the Eu basis: the unique integer c with
/// a = sum_j c_j Eu(cl V_j, .), via back-substitution.
IntVector decompose(const EuTable& table, const ConstructibleFunction& a);
IntVector decompose(const GermModel& m, const ConstructibleFunction& a);

/// sum_j c_j Eu(cl V_j, .).
ConstructibleFunction recompose(const EuTable& table, const IntVector& coeffs);

/// Characteristic-cycle data of a: coefficient n_j = (-1)^dim_j c_j on the
/// conormal of V_j, and the support { j : c_j != 0 }.
struct CCData {
  IntVector coeffs;
  std::vector<Index> support;
};

CCData cc(const GermModel& m, const ConstructibleFunction& a);

/// The covector hypothesis: no stratum of the support is degenerate for c.
bool is_admissible(const GermModel& m, std::string_view covector,
                   const IntVector& coeffs);

struct BlsResult {
  Int lhs = 0;      // alpha(0)
  Int rhs = 0;      // weighted closed-section sum
  Int defect = 0;   // lhs - rhs; 0 whenever the covector is admissible
  bool admissible = false;
};

/// Evaluate the hyperplane-section identity alpha(0) = sum chi * alpha_i for
/// the named covector. For the generic covector the defect always equals the
/// base coefficient of decompose(a).
BlsResult bls_evaluate(const GermModel& m, const ConstructibleFunction& a,
                       std::string_view covector);

/// Signed count of the intersections of the covector graph with the
/// characteristic cycle of a: sum of n_j(a) * mult[j] over degenerate j in
/// the support. Throws InsufficientDataError when a needed multiplicity is
/// absent.
Int index_pairing(const GermModel& m, const ConstructibleFunction& a,
                  std::string_view covector);

/// vanishing_stalk + index_pairing == 0. Propagates InsufficientDataError.
bool check_eq8(const GermModel& m, const ConstructibleFunction& a,
               std::string_view covector);

}  // namespace eucalc
