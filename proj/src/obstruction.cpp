#include "eucalc/obstruction.hpp"

namespace eucalc {

namespace {

ConstructibleFunction eu_column(const GermModel& m, const IntMatrix& ns, Index j) {
  ConstructibleFunction e = ConstructibleFunction::Zero(m.size());
  e[j] = 1;
  // Canonical order is a linear extension, so descending indices visit
  // every stratum after all strata above it.
  for (Index i = j - 1; i >= 0; --i) {
    if (!m.strictly_below(i, j)) continue;
    Int sum = 0;
    for (Index k = i + 1; k <= j; ++k)
      if (m.strictly_below(i, k) && m.leq(k, j)) sum += ns(i, k) * e[k];
    e[i] = sum;
  }
  return e;
}

}  // namespace

bool EuTable::unit_triangular() const {
  for (Index i = 0; i < M.rows(); ++i) {
    if (M(i, i) != 1) return false;
    for (Index j = 0; j < i; ++j)
      if (M(i, j) != 0) return false;
  }
  return true;
}

ConstructibleFunction eu_function(const GermModel& m, Index j) {
  require_valid(m);
  return eu_column(m, m.covector("generic").closed, j);
}

ConstructibleFunction eu_function(const GermModel& m, std::string_view id) {
  return eu_function(m, m.index_of(id));
}

EuTable eu_table(const GermModel& m) {
  require_valid(m);
  const IntMatrix& ns = m.covector("generic").closed;
  EuTable table;
  table.M.resize(m.size(), m.size());
  table.cc_sign.resize(m.size());
  for (Index j = 0; j < m.size(); ++j) {
    table.M.col(j) = eu_column(m, ns, j);
    table.cc_sign[j] = (m.stratum(j).dim % 2 == 0) ? 1 : -1;
  }
  return table;
}

ConstructibleFunction whole_germ_eu(const GermModel& m) {
  const EuTable table = eu_table(m);
  ConstructibleFunction e = ConstructibleFunction::Zero(m.size());
  for (Index j : m.maximal_strata()) e += table.M.col(j);
  return e;
}

IntVector decompose(const EuTable& table, const ConstructibleFunction& a) {
  const Index n = table.M.rows();
  if (a.size() != n)
    throw ModelError("decompose: function size does not match the table");
  IntVector c = IntVector::Zero(n);
  for (Index i = n - 1; i >= 0; --i) {
    Int sum = a[i];
    for (Index j = i + 1; j < n; ++j) sum -= table.M(i, j) * c[j];
    c[i] = sum;  // diagonal is 1
  }
  return c;
}

IntVector decompose(const GermModel& m, const ConstructibleFunction& a) {
  return decompose(eu_table(m), a);
}

ConstructibleFunction recompose(const EuTable& table, const IntVector& coeffs) {
  if (coeffs.size() != table.M.cols())
    throw ModelError("recompose: coefficient size does not match the table");
  return table.M * coeffs;
}

CCData cc(const GermModel& m, const ConstructibleFunction& a) {
  const EuTable table = eu_table(m);
  const IntVector c = decompose(table, a);
  CCData data;
  data.coeffs = table.cc_sign.cwiseProduct(c);
  for (Index j = 0; j < c.size(); ++j)
    if (c[j] != 0) data.support.push_back(j);
  return data;
}

bool is_admissible(const GermModel& m, std::string_view covector,
                   const IntVector& coeffs) {
  const CovectorClass& c = m.covector(covector);
  for (Index j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0 && c.degenerate[static_cast<std::size_t>(j)]) return false;
  return true;
}

BlsResult bls_evaluate(const GermModel& m, const ConstructibleFunction& a,
                       std::string_view covector) {
  require_valid(m);
  BlsResult r;
  r.lhs = stalk(m, a);
  r.rhs = nearby_stalk(m, a, covector);
  r.defect = r.lhs - r.rhs;
  r.admissible = is_admissible(m, covector, decompose(m, a));
  return r;
}

Int index_pairing(const GermModel& m, const ConstructibleFunction& a,
                  std::string_view covector) {
  require_valid(m);
  const CovectorClass& cov = m.covector(covector);
  const EuTable table = eu_table(m);
  const IntVector c = decompose(table, a);
  Int sum = 0;
  for (Index j = 0; j < c.size(); ++j) {
    if (c[j] == 0 || !cov.degenerate[static_cast<std::size_t>(j)]) continue;
    const auto& mult = cov.mult[static_cast<std::size_t>(j)];
    if (!mult)
      throw InsufficientDataError("insufficient intersection data: covector '" +
                                  cov.name + "' has no multiplicity for stratum '" +
                                  m.stratum(j).id + "'");
    sum += table.cc_sign[j] * c[j] * *mult;
  }
  return sum;
}

bool check_eq8(const GermModel& m, const ConstructibleFunction& a,
               std::string_view covector) {
  return vanishing_stalk(m, a, covector) + index_pairing(m, a, covector) == 0;
}

}  // namespace eucalc
