#include "eucalc/model.hpp"

#include <algorithm>
#include <numeric>

#include "eucalc/rng.hpp"

namespace eucalc {

namespace {

std::string pair_locus(const GermModel& m, Index i, Index k) {
  return "(" + m.stratum(i).id + "," + m.stratum(k).id + ")";
}

}  // namespace

GermModel GermModel::create(ModelSpec spec) {
  GermModel m;
  m.name_ = std::move(spec.name);

  // Canonical order: base first, then by complex dimension, stable in the
  // input order. For models passing validation this is a linear extension
  // of the closure order.
  std::vector<std::size_t> order(spec.strata.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Stratum& sa = spec.strata[a];
    const Stratum& sb = spec.strata[b];
    if (sa.is_base != sb.is_base) return sa.is_base;
    return sa.dim < sb.dim;
  });
  for (std::size_t pos : order) m.strata_.push_back(spec.strata[pos]);

  const Index n = m.size();
  for (Index i = 0; i < n; ++i) {
    const Stratum& s = m.strata_[static_cast<std::size_t>(i)];
    if (s.id.empty()) throw ModelError("stratum with empty id");
    if (s.dim < 0) throw ModelError("stratum '" + s.id + "' has negative dimension");
    if (!m.index_.emplace(s.id, i).second)
      throw ModelError("duplicate stratum id '" + s.id + "'");
  }

  // Closure order: reflexive-transitive closure of the given pairs.
  m.leq_ = BoolGrid::Constant(n, n, false);
  for (Index i = 0; i < n; ++i) m.leq_(i, i) = true;
  for (const auto& [lo, hi] : spec.closure) {
    const Index i = m.index_of(lo);
    const Index k = m.index_of(hi);
    if (i == k) throw ModelError("closure pair relates '" + lo + "' to itself");
    m.leq_(i, k) = true;
  }
  for (Index t = 0; t < n; ++t)
    for (Index i = 0; i < n; ++i)
      for (Index k = 0; k < n; ++k)
        if (m.leq_(i, t) && m.leq_(t, k)) m.leq_(i, k) = true;
  for (Index i = 0; i < n; ++i)
    for (Index k = i + 1; k < n; ++k)
      if (m.leq_(i, k) && m.leq_(k, i))
        throw ModelError("closure relation has a cycle through " + pair_locus(m, i, k));

  m.lk_ = IntMatrix::Zero(n, n);
  for (const auto& [row_id, row] : spec.links) {
    const Index i = m.index_of(row_id);
    for (const auto& [col_id, value] : row) {
      const Index k = m.index_of(col_id);
      if (!m.leq_(i, k))
        throw ModelError("link entry " + pair_locus(m, i, k) +
                         " is not a comparable pair");
      m.lk_(i, k) = value;
    }
  }

  // Resolve covectors. Named covectors fall back to the generic rows for
  // rows they do not provide; a provided row overrides entirely.
  const ModelSpec::Covector* generic = nullptr;
  if (auto it = spec.covectors.find("generic"); it != spec.covectors.end())
    generic = &it->second;

  Index base_index = -1;
  {
    Index count = 0;
    for (Index i = 0; i < n; ++i)
      if (m.strata_[static_cast<std::size_t>(i)].is_base) {
        base_index = i;
        ++count;
      }
    if (count != 1) base_index = -1;  // validation reports this
  }

  auto fill_rows = [&](IntMatrix& target, const std::string& cov_name,
                       const std::map<std::string, std::map<std::string, Int>>& rows) {
    for (const auto& [row_id, row] : rows) {
      const Index i = m.index_of(row_id);
      for (const auto& [col_id, value] : row) {
        const Index k = m.index_of(col_id);
        if (i == k || !m.leq_(i, k))
          throw ModelError("covector '" + cov_name + "' section entry " +
                           pair_locus(m, i, k) + " is not a strict comparable pair");
        target(i, k) = value;
      }
    }
  };

  auto resolve = [&](const std::string& cov_name, const ModelSpec::Covector& raw,
                     const CovectorClass* resolved_generic) {
    CovectorClass c;
    c.name = cov_name;
    c.closed = IntMatrix::Zero(n, n);
    c.open = IntMatrix::Zero(n, n);
    if (resolved_generic) {
      std::set<std::string> provided;
      for (const auto& [row_id, row] : raw.closed) provided.insert(row_id);
      for (const auto& [row_id, row] : raw.open) provided.insert(row_id);
      for (Index i = 0; i < n; ++i) {
        const std::string& id = m.strata_[static_cast<std::size_t>(i)].id;
        if (!provided.count(id)) {
          c.closed.row(i) = resolved_generic->closed.row(i);
          c.open.row(i) = resolved_generic->open.row(i);
        }
      }
    }
    fill_rows(c.closed, cov_name, raw.closed);
    fill_rows(c.open, cov_name, raw.open);

    c.degenerate.assign(static_cast<std::size_t>(n), false);
    for (const auto& id : raw.degenerate)
      c.degenerate[static_cast<std::size_t>(m.index_of(id))] = true;
    c.mult.assign(static_cast<std::size_t>(n), std::nullopt);
    for (const auto& [id, value] : raw.mult)
      c.mult[static_cast<std::size_t>(m.index_of(id))] = value;
    if (base_index >= 0) {
      c.degenerate[static_cast<std::size_t>(base_index)] = true;
      auto& base_mult = c.mult[static_cast<std::size_t>(base_index)];
      if (!base_mult) base_mult = 1;
    }
    return c;
  };

  CovectorClass resolved_generic;
  if (generic) {
    resolved_generic = resolve("generic", *generic, nullptr);
    m.covectors_.emplace("generic", resolved_generic);
  }
  for (const auto& [cov_name, raw] : spec.covectors) {
    if (cov_name == "generic") continue;
    m.covectors_.emplace(cov_name, resolve(cov_name, raw, generic ? &resolved_generic : nullptr));
  }

  return m;
}

bool GermModel::has_stratum(std::string_view id) const {
  return index_.find(id) != index_.end();
}

Index GermModel::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw ModelError("unknown stratum '" + std::string(id) + "'");
  return it->second;
}

Index GermModel::base() const {
  Index found = -1;
  for (Index i = 0; i < size(); ++i) {
    if (strata_[static_cast<std::size_t>(i)].is_base) {
      if (found >= 0) throw ModelError("model has more than one base stratum");
      found = i;
    }
  }
  if (found < 0) throw ModelError("model has no base stratum");
  return found;
}

bool GermModel::has_covector(std::string_view name) const {
  return covectors_.find(name) != covectors_.end();
}

const CovectorClass& GermModel::covector(std::string_view name) const {
  auto it = covectors_.find(name);
  if (it == covectors_.end())
    throw ModelError("unknown covector '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::pair<Index, Index>> GermModel::reduction() const {
  std::vector<std::pair<Index, Index>> out;
  const Index n = size();
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      if (i == k || !leq_(i, k)) continue;
      bool covered = true;
      for (Index t = 0; t < n && covered; ++t)
        if (t != i && t != k && leq_(i, t) && leq_(t, k)) covered = false;
      if (covered) out.emplace_back(i, k);
    }
  }
  return out;
}

std::vector<Index> GermModel::maximal_strata() const {
  std::vector<Index> out;
  for (Index k = 0; k < size(); ++k) {
    bool maximal = true;
    for (Index j = 0; j < size() && maximal; ++j)
      if (j != k && leq_(k, j)) maximal = false;
    if (maximal) out.push_back(k);
  }
  return out;
}

std::vector<Index> GermModel::downset(Index j) const {
  std::vector<Index> out;
  for (Index k = 0; k < size(); ++k)
    if (leq_(k, j)) out.push_back(k);
  return out;
}

GermModel GermModel::with_lk(IntMatrix lk) const {
  GermModel copy = *this;
  copy.lk_ = std::move(lk);
  return copy;
}

GermModel GermModel::with_sections(std::string_view covector, IntMatrix closed,
                                   IntMatrix open) const {
  GermModel copy = *this;
  auto it = copy.covectors_.find(covector);
  if (it == copy.covectors_.end())
    throw ModelError("unknown covector '" + std::string(covector) + "'");
  it->second.closed = std::move(closed);
  it->second.open = std::move(open);
  return copy;
}

GermModel GermModel::with_name(std::string name) const {
  GermModel copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

const Check* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

ValidationReport validate_model(const GermModel& m) {
  ValidationReport report;
  const Index n = m.size();

  Index base = -1;
  {
    Index count = 0;
    for (Index i = 0; i < n; ++i)
      if (m.stratum(i).is_base) {
        base = i;
        ++count;
      }

    Check c{"base", true, "", ""};
    if (count != 1) {
      c.pass = false;
      c.detail = "expected exactly one base stratum, found " + std::to_string(count);
      base = -1;
    } else if (m.stratum(base).dim != 0) {
      c.pass = false;
      c.locus = "(" + m.stratum(base).id + ")";
      c.detail = "base stratum must have complex dimension 0";
    }
    report.checks.push_back(std::move(c));
  }

  {
    // Partial-order structure beyond what create() enforces: the base lies
    // below every stratum (connected germ).
    Check c{"poset", true, "", ""};
    if (base < 0) {
      c.pass = false;
      c.detail = "cannot locate a unique base stratum";
    } else {
      for (Index k = 0; k < n && c.pass; ++k) {
        if (!m.leq(base, k)) {
          c.pass = false;
          c.locus = "(" + m.stratum(k).id + ")";
          c.detail = "stratum is not above the base stratum";
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    Check c{"dims", true, "", ""};
    for (Index i = 0; i < n && c.pass; ++i)
      for (Index k = 0; k < n && c.pass; ++k)
        if (m.strictly_below(i, k) && m.stratum(i).dim >= m.stratum(k).dim) {
          c.pass = false;
          c.locus = pair_locus(m, i, k);
          c.detail = "dimension must strictly increase along the closure order";
        }
    report.checks.push_back(std::move(c));
  }

  {
    Check c{"lk", true, "", ""};
    for (Index i = 0; i < n && c.pass; ++i) {
      for (Index k = 0; k < n && c.pass; ++k) {
        if (!m.leq(i, k) && m.lk()(i, k) != 0) {
          c.pass = false;
          c.locus = pair_locus(m, i, k);
          c.detail = "link entry stored off the comparable-pair support";
        }
      }
      if (c.pass && m.stratum(i).dim >= 1 && m.lk()(i, i) != 0) {
        c.pass = false;
        c.locus = pair_locus(m, i, i);
        c.detail = "link of a stratum with itself is an odd sphere; chi_c must be 0";
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    // Sullivan sums over every principal closure: for i <= j the link of a
    // point of V_i inside cl(V_j) has vanishing Euler characteristic.
    Check c{"sullivan", true, "", ""};
    for (Index i = 0; i < n && c.pass; ++i) {
      for (Index j = 0; j < n && c.pass; ++j) {
        if (!m.leq(i, j)) continue;
        Int sum = 0;
        for (Index k = 0; k < n; ++k)
          if (m.leq(i, k) && m.leq(k, j)) sum += m.lk()(i, k);
        if (sum != 0) {
          c.pass = false;
          c.locus = pair_locus(m, i, j);
          c.detail = "link sum over the closure interval is " + std::to_string(sum) +
                     ", expected 0";
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    Check c{"duality", true, "", ""};
    for (const auto& [name, cov] : m.covectors()) {
      if (!c.pass) break;
      for (Index i = 0; i < n && c.pass; ++i)
        for (Index k = 0; k < n && c.pass; ++k)
          if (cov.closed(i, k) != cov.open(i, k)) {
            c.pass = false;
            c.locus = "(" + name + ":" + m.stratum(i).id + "," + m.stratum(k).id + ")";
            c.detail = "closed section chi and open section chi_c differ";
          }
    }
    report.checks.push_back(std::move(c));
  }

  {
    Check c{"covector", true, "", ""};
    auto fail = [&](std::string locus, std::string detail) {
      c.pass = false;
      c.locus = std::move(locus);
      c.detail = std::move(detail);
    };
    if (!m.has_covector("generic")) {
      fail("(generic)", "mandatory 'generic' covector is missing");
    }
    for (const auto& [name, cov] : m.covectors()) {
      if (!c.pass) break;
      for (Index i = 0; i < n && c.pass; ++i)
        for (Index k = 0; k < n && c.pass; ++k)
          if (!m.strictly_below(i, k) && (cov.closed(i, k) != 0 || cov.open(i, k) != 0))
            fail("(" + name + ":" + m.stratum(i).id + "," + m.stratum(k).id + ")",
                 "section entry stored off the strict-pair support");
      if (!c.pass) break;
      if (base >= 0) {
        if (!cov.degenerate[static_cast<std::size_t>(base)])
          fail("(" + name + ")", "base stratum must be degenerate for every covector");
        else if (!cov.mult[static_cast<std::size_t>(base)] ||
                 *cov.mult[static_cast<std::size_t>(base)] != 1)
          fail("(" + name + ")", "base stratum multiplicity must be 1");
      }
      for (Index j = 0; j < n && c.pass; ++j) {
        const auto& mult = cov.mult[static_cast<std::size_t>(j)];
        if (mult && !cov.degenerate[static_cast<std::size_t>(j)] && *mult != 0)
          fail("(" + name + ":" + m.stratum(j).id + ")",
               "nonzero multiplicity on a nondegenerate stratum");
      }
      if (c.pass && name == "generic" && base >= 0) {
        for (Index j = 0; j < n && c.pass; ++j)
          if (j != base && cov.degenerate[static_cast<std::size_t>(j)])
            fail("(generic:" + m.stratum(j).id + ")",
                 "generic covector must be degenerate only on the base stratum");
      }
    }
    report.checks.push_back(std::move(c));
  }

  return report;
}

void require_valid(const GermModel& m) {
  const ValidationReport report = validate_model(m);
  if (const Check* failed = report.first_failure())
    throw InvalidModelError("model '" + m.name() + "' failed check " +
                            failed->display() + ": " + failed->detail);
}

GermModel generate_random_model(std::uint64_t seed, int size) {
  if (size < 1) throw ModelError("random model size must be at least 1");
  Rng rng(seed);

  ModelSpec spec;
  spec.name = "random-" + std::to_string(seed) + "-" + std::to_string(size);
  spec.strata.push_back({"s0", 0, true});

  std::vector<Int> dims(static_cast<std::size_t>(size));
  for (int t = 0; t < size; ++t) {
    dims[static_cast<std::size_t>(t)] =
        (t == 0) ? rng.uniform(1, 2) : dims[static_cast<std::size_t>(t - 1)] + rng.uniform(0, 1);
    spec.strata.push_back({"s" + std::to_string(t + 1), dims[static_cast<std::size_t>(t)], false});
  }
  for (int t = 0; t < size; ++t) {
    spec.closure.emplace_back("s0", "s" + std::to_string(t + 1));
    for (int u = 0; u < t; ++u)
      if (dims[static_cast<std::size_t>(u)] < dims[static_cast<std::size_t>(t)] && rng.coin())
        spec.closure.emplace_back("s" + std::to_string(u + 1), "s" + std::to_string(t + 1));
  }

  GermModel skeleton = GermModel::create(spec);
  const Index n = skeleton.size();

  ModelSpec::Covector generic;
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k)
      if (skeleton.strictly_below(i, k)) {
        const Int value = rng.uniform(-3, 3);
        const auto& row_id = skeleton.stratum(i).id;
        const auto& col_id = skeleton.stratum(k).id;
        generic.closed[row_id][col_id] = value;
        generic.open[row_id][col_id] = value;
      }
  spec.covectors.emplace("generic", std::move(generic));

  // Draw link entries freely, then solve the k = j entry of each principal
  // closure sum so every Sullivan sum vanishes.
  IntMatrix lk = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k)
      if (skeleton.strictly_below(i, k)) lk(i, k) = rng.uniform(-3, 3);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (!skeleton.leq(i, j)) continue;
      Int partial = 0;
      for (Index k = 0; k < n; ++k)
        if (k != j && skeleton.leq(i, k) && skeleton.leq(k, j)) partial += lk(i, k);
      lk(i, j) = -partial;
    }
  }
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k)
      if (skeleton.leq(i, k) && lk(i, k) != 0)
        spec.links[skeleton.stratum(i).id][skeleton.stratum(k).id] = lk(i, k);

  return GermModel::create(spec);
}

GermModel restrict_to_closure(const GermModel& m, std::string_view top_id) {
  const Index top = m.index_of(top_id);
  const Index base = m.base();

  std::vector<Index> keep = m.downset(top);
  if (std::find(keep.begin(), keep.end(), base) == keep.end())
    keep.insert(keep.begin(), base);

  ModelSpec spec;
  spec.name = m.name() + "|cl(" + std::string(top_id) + ")";
  for (Index i : keep) spec.strata.push_back(m.stratum(i));
  for (Index i : keep)
    for (Index k : keep)
      if (m.strictly_below(i, k)) spec.closure.emplace_back(m.stratum(i).id, m.stratum(k).id);
  for (Index i : keep)
    for (Index k : keep)
      if (m.leq(i, k) && m.lk()(i, k) != 0)
        spec.links[m.stratum(i).id][m.stratum(k).id] = m.lk()(i, k);

  for (const auto& [name, cov] : m.covectors()) {
    ModelSpec::Covector raw;
    for (Index i : keep) {
      for (Index k : keep) {
        if (!m.strictly_below(i, k)) continue;
        raw.closed[m.stratum(i).id][m.stratum(k).id] = cov.closed(i, k);
        raw.open[m.stratum(i).id][m.stratum(k).id] = cov.open(i, k);
      }
      // Mark every kept row as provided so nothing falls back to generic.
      raw.closed.try_emplace(m.stratum(i).id);
      raw.open.try_emplace(m.stratum(i).id);
    }
    for (Index j : keep) {
      if (cov.degenerate[static_cast<std::size_t>(j)]) raw.degenerate.insert(m.stratum(j).id);
      if (cov.mult[static_cast<std::size_t>(j)])
        raw.mult[m.stratum(j).id] = *cov.mult[static_cast<std::size_t>(j)];
    }
    spec.covectors.emplace(name, std::move(raw));
  }

  return GermModel::create(spec);
}

ConstructibleFunction constant_function(const GermModel& m, Int value) {
  return ConstructibleFunction::Constant(m.size(), value);
}

ConstructibleFunction indicator(const GermModel& m, const std::vector<std::string>& ids) {
  ConstructibleFunction a = ConstructibleFunction::Zero(m.size());
  for (const auto& id : ids) a[m.index_of(id)] = 1;
  return a;
}

ConstructibleFunction basis_function(const GermModel& m, Index j) {
  ConstructibleFunction a = ConstructibleFunction::Zero(m.size());
  a[j] = 1;
  return a;
}

ConstructibleFunction function_from_values(const GermModel& m,
                                           const std::map<std::string, Int>& values) {
  ConstructibleFunction a = ConstructibleFunction::Zero(m.size());
  std::vector<bool> seen(static_cast<std::size_t>(m.size()), false);
  for (const auto& [id, value] : values) {
    const Index i = m.index_of(id);
    a[i] = value;
    seen[static_cast<std::size_t>(i)] = true;
  }
  std::string missing;
  for (Index i = 0; i < m.size(); ++i)
    if (!seen[static_cast<std::size_t>(i)])
      missing += (missing.empty() ? "" : ", ") + m.stratum(i).id;
  if (!missing.empty())
    throw ModelError("constructible function is missing values for: " + missing);
  return a;
}

std::map<std::string, Int> values_by_id(const GermModel& m,
                                        const ConstructibleFunction& a) {
  std::map<std::string, Int> out;
  for (Index i = 0; i < m.size(); ++i) out[m.stratum(i).id] = a[i];
  return out;
}

}  // namespace eucalc
