#include "eucalc/calculus.hpp"

#include <algorithm>
#include <set>

namespace eucalc {

namespace {

void check_size(const GermModel& m, const ConstructibleFunction& a) {
  if (a.size() != m.size())
    throw ModelError("constructible function has " + std::to_string(a.size()) +
                     " values for a model with " + std::to_string(m.size()) + " strata");
}

}  // namespace

Int stalk(const GermModel& m, const ConstructibleFunction& a) {
  check_size(m, a);
  return a[m.base()];
}

Int link_chi(const GermModel& m, const ConstructibleFunction& a, Index i) {
  check_size(m, a);
  Int sum = 0;
  for (Index k = 0; k < m.size(); ++k)
    if (m.leq(i, k)) sum += m.lk()(i, k) * a[k];
  return sum;
}

Int link_chi(const GermModel& m, const ConstructibleFunction& a, std::string_view id) {
  return link_chi(m, a, m.index_of(id));
}

Int costalk(const GermModel& m, const ConstructibleFunction& a) {
  return stalk(m, a) - link_chi(m, a, m.base());
}

Int nearby_stalk(const GermModel& m, const ConstructibleFunction& a,
                 std::string_view covector) {
  check_size(m, a);
  const CovectorClass& c = m.covector(covector);
  const Index base = m.base();
  Int sum = 0;
  for (Index k = 0; k < m.size(); ++k)
    if (k != base) sum += c.closed(base, k) * a[k];
  return sum;
}

Int nearby_costalk(const GermModel& m, const ConstructibleFunction& a,
                   std::string_view covector) {
  check_size(m, a);
  const CovectorClass& c = m.covector(covector);
  const Index base = m.base();
  Int sum = 0;
  for (Index k = 0; k < m.size(); ++k)
    if (k != base) sum += c.open(base, k) * a[k];
  return sum;
}

Int vanishing_stalk(const GermModel& m, const ConstructibleFunction& a,
                    std::string_view covector) {
  return nearby_stalk(m, a, covector) - stalk(m, a);
}

bool check_eq5(const GermModel& m, const ConstructibleFunction& a,
               std::string_view covector) {
  return nearby_stalk(m, a, covector) == nearby_costalk(m, a, covector);
}

bool check_eq6(const GermModel& m, const std::vector<Index>& closed_union) {
  const Index base = m.base();
  std::set<Index> z(closed_union.begin(), closed_union.end());
  for (Index k : z) {
    if (k < 0 || k >= m.size())
      throw ModelError("stratum index out of range in closed union");
    for (Index i = 0; i < m.size(); ++i)
      if (i != base && m.strictly_below(i, k) && !z.count(i))
        throw ModelError("union is not closed: " + m.stratum(i).id +
                         " lies below " + m.stratum(k).id + " but is missing");
  }
  std::vector<std::string> ids;
  ids.reserve(z.size());
  for (Index k : z) ids.push_back(m.stratum(k).id);
  const ConstructibleFunction one_z = indicator(m, ids);
  return stalk(m, one_z) == costalk(m, one_z);
}

bool check_eq6(const GermModel& m, const std::vector<std::string>& closed_union) {
  std::vector<Index> z;
  z.reserve(closed_union.size());
  for (const auto& id : closed_union) z.push_back(m.index_of(id));
  return check_eq6(m, z);
}

StalkReport stalk_report(const GermModel& m, const ConstructibleFunction& a,
                         std::string_view covector) {
  StalkReport r;
  r.stalk = stalk(m, a);
  r.costalk = costalk(m, a);
  r.psi_stalk = nearby_stalk(m, a, covector);
  r.psi_costalk = nearby_costalk(m, a, covector);
  r.phi_stalk = r.psi_stalk - r.stalk;
  r.covector = std::string(covector);
  return r;
}

}  // namespace eucalc
