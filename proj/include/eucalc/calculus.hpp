#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eucalc/model.hpp"
#include "eucalc/types.hpp"

namespace eucalc {

/// alpha(0): the value on the base stratum.
Int stalk(const GermModel& m, const ConstructibleFunction& a);

/// Weighted Euler characteristic of the link of a point of V_i:
/// sum over k >= i of LK[i][k] * a_k.
Int link_chi(const GermModel& m, const ConstructibleFunction& a, Index i);
Int link_chi(const GermModel& m, const ConstructibleFunction& a, std::string_view id);

/// alpha(0) minus the link characteristic at the base point.
Int costalk(const GermModel& m, const ConstructibleFunction& a);

/// Stalk of the nearby cycles at 0: the closed-section sum
/// sum over k > base of NSc[0][k] * a_k. Ignores a(base).
Int nearby_stalk(const GermModel& m, const ConstructibleFunction& a,
                 std::string_view covector);

/// Costalk of the nearby cycles at 0, via the open sections NSo.
Int nearby_costalk(const GermModel& m, const ConstructibleFunction& a,
                   std::string_view covector);

/// Stalk of the vanishing cycles: nearby_stalk - stalk.
Int vanishing_stalk(const GermModel& m, const ConstructibleFunction& a,
                    std::string_view covector);

/// nearby_stalk == nearby_costalk. True on every valid model; exposed to
/// exercise invalid ones.
bool check_eq5(const GermModel& m, const ConstructibleFunction& a,
               std::string_view covector);

/// stalk(1_Z) == costalk(1_Z) for Z a union of strata closed under
/// going-down among non-base strata (base optional). Throws ModelError
/// naming the violating pair when Z is not closed.
bool check_eq6(const GermModel& m, const std::vector<std::string>& closed_union);
bool check_eq6(const GermModel& m, const std::vector<Index>& closed_union);

struct StalkReport {
  Int stalk = 0;
  Int costalk = 0;
  Int psi_stalk = 0;
  Int psi_costalk = 0;
  Int phi_stalk = 0;
  std::string covector;
};

StalkReport stalk_report(const GermModel& m, const ConstructibleFunction& a,
                         std::string_view covector);

}  // namespace eucalc
