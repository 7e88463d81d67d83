#include "eucalc/fuzz.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "eucalc/calculus.hpp"
#include "eucalc/model_json.hpp"
#include "eucalc/obstruction.hpp"

namespace eucalc {

namespace {

std::string vec_text(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  out << ')';
  return out.str();
}

class PropertyRun {
 public:
  PropertyRun(const GermModel& m, std::uint64_t model_seed, FuzzReport& report)
      : m_(m), model_seed_(model_seed), report_(report) {}

  bool check(const std::string& property, bool ok, const std::string& detail) {
    ++report_.checks;
    if (ok) return true;
    FuzzFailure failure;
    failure.model_seed = model_seed_;
    failure.property = property;
    failure.detail = detail;
    failure.model_json = to_json(m_).dump(2);
    report_.failure = std::move(failure);
    return false;
  }

 private:
  const GermModel& m_;
  std::uint64_t model_seed_;
  FuzzReport& report_;
};

}  // namespace

ConstructibleFunction random_function(const GermModel& m, Rng& rng) {
  ConstructibleFunction a(m.size());
  for (Index i = 0; i < m.size(); ++i) a[i] = rng.uniform(-5, 5);
  return a;
}

FuzzReport run_fuzz(const FuzzOptions& options) {
  FuzzReport report;
  if (options.count < 1) throw ModelError("fuzz count must be at least 1");

  for (int iter = 0; iter < options.count && !report.failure; ++iter) {
    const std::uint64_t model_seed = options.seed + static_cast<std::uint64_t>(iter);
    const int size = 1 + iter % options.max_size;
    GermModel m = generate_random_model(model_seed, size);
    if (options.mutate) m = options.mutate(m);
    ++report.models;

    PropertyRun run(m, model_seed, report);

    const ValidationReport validation = validate_model(m);
    if (!run.check("validate", validation.valid(),
                   validation.first_failure()
                       ? validation.first_failure()->display() + ": " +
                             validation.first_failure()->detail
                       : ""))
      break;

    const EuTable table = eu_table(m);
    if (!run.check("eu-unit-triangular", table.unit_triangular(), "")) break;

    const Index base = m.base();
    Rng rng(model_seed ^ 0x9e3779b97f4a7c15ull);
    bool ok = true;
    for (int t = 0; t < options.functions_per_model && ok; ++t) {
      const ConstructibleFunction a = random_function(m, rng);
      const IntVector c = decompose(table, a);

      ok = run.check("decompose-recompose",
                     (recompose(table, c).array() == a.array()).all(),
                     "alpha = " + vec_text(a));
      if (!ok) break;

      IntVector c2(m.size());
      for (Index i = 0; i < m.size(); ++i) c2[i] = rng.uniform(-5, 5);
      ok = run.check("recompose-decompose",
                     (decompose(table, recompose(table, c2)).array() == c2.array()).all(),
                     "coeffs = " + vec_text(c2));
      if (!ok) break;

      // Hyperplane-section identity on the admissible span: kill the base
      // coefficient and the generic defect must vanish.
      IntVector admissible_coeffs = c2;
      admissible_coeffs[base] = 0;
      const ConstructibleFunction in_span = recompose(table, admissible_coeffs);
      const BlsResult bls_span = bls_evaluate(m, in_span, "generic");
      ok = run.check("thm2-admissible",
                     bls_span.defect == 0 && bls_span.admissible,
                     "coeffs = " + vec_text(admissible_coeffs) + ", defect = " +
                         std::to_string(bls_span.defect));
      if (!ok) break;

      const BlsResult bls = bls_evaluate(m, a, "generic");
      ok = run.check("defect-is-base-coefficient", bls.defect == c[base],
                     "alpha = " + vec_text(a) + ", defect = " + std::to_string(bls.defect) +
                         ", c_base = " + std::to_string(c[base]));
      if (!ok) break;

      ok = run.check("eq5", check_eq5(m, a, "generic"), "alpha = " + vec_text(a));
      if (!ok) break;

      ok = run.check("eq8-generic",
                     vanishing_stalk(m, a, "generic") + index_pairing(m, a, "generic") == 0,
                     "alpha = " + vec_text(a));
      if (!ok) break;

      const ConstructibleFunction b = random_function(m, rng);
      ok = run.check("linearity",
                     vanishing_stalk(m, a + b, "generic") ==
                         vanishing_stalk(m, a, "generic") + vanishing_stalk(m, b, "generic"),
                     "alpha = " + vec_text(a) + ", beta = " + vec_text(b));
      if (!ok) break;

      ConstructibleFunction shifted = a;
      shifted[base] += rng.uniform(1, 5);
      ok = run.check("sections-miss-base",
                     nearby_stalk(m, shifted, "generic") == nearby_stalk(m, a, "generic"),
                     "alpha = " + vec_text(a));
      if (!ok) break;
    }
    if (!ok) break;

    bool eq6_ok = true;
    std::string eq6_detail;
    for (Index j = 0; j < m.size() && eq6_ok; ++j) {
      if (!check_eq6(m, m.downset(j))) {
        eq6_ok = false;
        eq6_detail = "principal closure of " + m.stratum(j).id;
      }
    }
    if (!run.check("eq6-principal-closures", eq6_ok, eq6_detail)) break;

    const Index pick = static_cast<Index>(rng.uniform(0, m.size() - 1));
    const GermModel sub = restrict_to_closure(m, m.stratum(pick).id);
    if (!run.check("restrict-preserves-validity", validate_model(sub).valid(),
                   "restricted to " + m.stratum(pick).id))
      break;
  }

  return report;
}

}  // namespace eucalc
