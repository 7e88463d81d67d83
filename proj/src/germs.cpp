#include "eucalc/germs.hpp"

#include <algorithm>

namespace eucalc {

GermModel smooth_germ(Int d) {
  if (d < 1) throw ModelError("smooth germ needs positive dimension");
  ModelSpec spec;
  spec.name = "smooth-" + std::to_string(d);
  spec.strata.push_back({"s0", 0, true});
  spec.strata.push_back({"s1", d, false});
  spec.closure.emplace_back("s0", "s1");
  ModelSpec::Covector generic;
  generic.closed["s0"]["s1"] = 1;
  generic.open["s0"]["s1"] = 1;
  spec.covectors.emplace("generic", std::move(generic));
  return GermModel::create(spec);
}

GermModel curve_germ(const std::vector<Int>& mults,
                     const std::map<std::string, CurveCovector>& extra_covectors) {
  if (mults.empty()) throw ModelError("curve germ needs at least one branch");
  ModelSpec spec;
  spec.name = "curve";
  spec.strata.push_back({"s0", 0, true});
  ModelSpec::Covector generic;
  for (std::size_t b = 0; b < mults.size(); ++b) {
    if (mults[b] < 1) throw ModelError("branch multiplicities must be positive");
    const std::string id = "s" + std::to_string(b + 1);
    spec.strata.push_back({id, 1, false});
    spec.closure.emplace_back("s0", id);
    generic.closed["s0"][id] = mults[b];
    generic.open["s0"][id] = mults[b];
  }
  spec.covectors.emplace("generic", std::move(generic));
  for (const auto& [name, extra] : extra_covectors) {
    ModelSpec::Covector cov;
    for (const auto& [branch, value] : extra.closed_row) {
      cov.closed["s0"][branch] = value;
      cov.open["s0"][branch] = value;
    }
    cov.degenerate = extra.degenerate;
    cov.mult = extra.mult;
    spec.covectors.emplace(name, std::move(cov));
  }
  return GermModel::create(spec);
}

GermModel cone_over(const std::vector<ConeStratum>& proj) {
  ModelSpec spec;
  spec.name = "cone";
  spec.strata.push_back({"s0", 0, true});
  ModelSpec::Covector generic;
  for (std::size_t i = 0; i < proj.size(); ++i) {
    const ConeStratum& y = proj[i];
    const std::string id = y.id.empty() ? "s" + std::to_string(i + 1) : y.id;
    spec.strata.push_back({id, y.dim + 1, false});
    spec.closure.emplace_back("s0", id);
    generic.closed["s0"][id] = y.chi_y - y.chi_yh;
    generic.open["s0"][id] = y.chi_y - y.chi_yh;
  }
  spec.covectors.emplace("generic", std::move(generic));
  return GermModel::create(spec);
}

GermModel whitney_umbrella(Int section_chi) {
  ModelSpec spec;
  spec.name = "umbrella";
  spec.strata.push_back({"s0", 0, true});
  spec.strata.push_back({"s1", 1, false});
  spec.strata.push_back({"s2", 2, false});
  spec.closure.emplace_back("s0", "s1");
  spec.closure.emplace_back("s1", "s2");
  ModelSpec::Covector generic;
  generic.closed["s0"]["s1"] = 1;
  generic.closed["s0"]["s2"] = section_chi;
  generic.closed["s1"]["s2"] = 2;  // node normal slice along the axis
  generic.open = generic.closed;
  spec.covectors.emplace("generic", std::move(generic));
  return GermModel::create(spec);
}

GermModel thicken(const GermModel& m, Int d) {
  if (d < 1) throw ModelError("thicken needs a positive dimension shift");
  const Index base = m.base();

  ModelSpec spec;
  spec.name = m.name() + "*C^" + std::to_string(d);
  for (Index i = 0; i < m.size(); ++i) {
    Stratum s = m.stratum(i);
    if (i != base) s.dim += d;  // the refined point stratum stays dim 0
    spec.strata.push_back(std::move(s));
  }
  for (const auto& [i, k] : m.reduction())
    spec.closure.emplace_back(m.stratum(i).id, m.stratum(k).id);
  for (Index i = 0; i < m.size(); ++i)
    for (Index k = 0; k < m.size(); ++k)
      if (m.leq(i, k) && m.lk()(i, k) != 0)
        spec.links[m.stratum(i).id][m.stratum(k).id] = m.lk()(i, k);
  for (const auto& [name, cov] : m.covectors()) {
    ModelSpec::Covector raw;
    for (Index i = 0; i < m.size(); ++i) {
      raw.closed.try_emplace(m.stratum(i).id);
      raw.open.try_emplace(m.stratum(i).id);
      for (Index k = 0; k < m.size(); ++k)
        if (m.strictly_below(i, k)) {
          raw.closed[m.stratum(i).id][m.stratum(k).id] = cov.closed(i, k);
          raw.open[m.stratum(i).id][m.stratum(k).id] = cov.open(i, k);
        }
    }
    for (Index j = 0; j < m.size(); ++j) {
      if (cov.degenerate[static_cast<std::size_t>(j)]) raw.degenerate.insert(m.stratum(j).id);
      if (cov.mult[static_cast<std::size_t>(j)])
        raw.mult[m.stratum(j).id] = *cov.mult[static_cast<std::size_t>(j)];
    }
    spec.covectors.emplace(name, std::move(raw));
  }
  return GermModel::create(spec);
}

namespace {

std::vector<ExampleDescriptor> make_examples() {
  std::vector<ExampleDescriptor> out;

  out.push_back({
      "node",
      "two transverse lines through the origin; Eu(X,0) = 2",
      2,
      {{"NSc[s0][s1] = NSc[s0][s2] = 1", Provenance::Derived,
        "simplicial: one-point branch sections (preimage count of a generic form)"},
       {"LK[s0][*] = 0", Provenance::Derived, "simplicial: circle links of the axes"}},
      [] { return curve_germ({1, 1}).with_name("node"); },
  });

  out.push_back({
      "cusp",
      "the (t^3, t^2) curve with the degenerate covector dx; Eu(X,0) = 2",
      2,
      {{"NSc_generic[s0][s1] = 2", Provenance::Derived,
        "simplicial: two-point section (generic form on the parametrization)"},
       {"NSc_dx[s0][s1] = 3", Provenance::Derived,
        "simplicial: three-point section (x = t^3 preimages)"},
       {"mult_dx[s1] = 1", Provenance::Derived,
        "index pairing: pinned by the skyscraper and dx sign checks"}},
      [] {
        CurveCovector dx;
        dx.closed_row["s1"] = 3;
        dx.degenerate = {"s1"};
        dx.mult = {{"s1", 1}};
        return curve_germ({2}, {{"dx", dx}}).with_name("cusp");
      },
  });

  out.push_back({
      "line",
      "a smooth line; Eu(X,0) = 1",
      1,
      {{"NSc[s0][s1] = 1", Provenance::Trivial, ""}},
      [] { return curve_germ({1}).with_name("line"); },
  });

  for (Int d = 1; d <= 4; ++d) {
    out.push_back({
        "smooth" + std::to_string(d),
        "a smooth germ of dimension " + std::to_string(d) + "; Eu(X,0) = 1",
        1,
        {{"NSc[s0][s1] = 1", Provenance::Trivial, ""}},
        [d] { return smooth_germ(d); },
    });
  }

  out.push_back({
      "quadric-cone",
      "cone over a plane conic; Eu(X,0) = 0",
      0,
      {{"NSc[s0][s1] = chi(Y) - chi(Y cap H) = 2 - 2 = 0", Provenance::Derived,
        "simplicial: annulus section, chi = chi_c = 0"}},
      [] {
        return cone_over({{"s1", 2, 2, 1}}).with_name("quadric-cone");
      },
  });

  for (Int d = 1; d <= 4; ++d) {
    out.push_back({
        "proj" + std::to_string(d),
        "cone over projective (" + std::to_string(d - 1) + ")-space = smooth C^" +
            std::to_string(d) + "; Eu(X,0) = 1",
        1,
        {{"NSc[s0][s1] = chi(P^(d-1)) - chi(P^(d-2)) = 1", Provenance::Trivial, ""}},
        [d] {
          return cone_over({{"s1", d, d - 1, d - 1}}).with_name("proj" + std::to_string(d));
        },
    });
  }

  out.push_back({
      "umbrella",
      "pinch-point surface with a singular axis; Eu(X,0) = 1, Eu(X,s1) = 2",
      1,
      {{"NSc[s1][s2] = 2", Provenance::Derived, "simplicial: two-point node slice"},
       {"NSc[s0][s2] = -1", Provenance::Derived,
        "simplicial: nodal-disk section (disk with two interior points glued)"}},
      [] { return whitney_umbrella(-1); },
  });

  out.push_back({
      "thick-node",
      "node times a smooth line; Eu(X,0) = 2",
      2,
      {{"all section/link rows", Provenance::Derived,
        "section data invariant under smooth factors (node entries reused)"}},
      [] { return thicken(curve_germ({1, 1}).with_name("node"), 1).with_name("thick-node"); },
  });

  return out;
}

}  // namespace

const std::vector<ExampleDescriptor>& curated_examples() {
  static const std::vector<ExampleDescriptor> examples = make_examples();
  return examples;
}

bool has_example(const std::string& name) {
  const auto& all = curated_examples();
  return std::any_of(all.begin(), all.end(),
                     [&](const ExampleDescriptor& e) { return e.name == name; });
}

const ExampleDescriptor& example_descriptor(const std::string& name) {
  for (const auto& e : curated_examples())
    if (e.name == name) return e;
  throw ModelError("unknown example '" + name + "'");
}

GermModel build_example(const std::string& name) {
  return example_descriptor(name).build();
}

}  // namespace eucalc
