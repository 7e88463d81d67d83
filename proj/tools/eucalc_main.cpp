// eucalc: exact Euler-obstruction calculus on stratified germ models.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "eucalc/calculus.hpp"
#include "eucalc/fuzz.hpp"
#include "eucalc/germs.hpp"
#include "eucalc/model_json.hpp"
#include "eucalc/obstruction.hpp"
#include "eucalc/simplicial.hpp"

namespace {

using eucalc::ConstructibleFunction;
using eucalc::GermModel;
using eucalc::Index;
using eucalc::Int;
using eucalc::IntVector;
using nlohmann::json;

constexpr int exit_pass = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct CommonOptions {
  bool as_json = false;
};

void emit(const CommonOptions& common, const json& doc, const std::string& text) {
  if (common.as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

json check_to_json(const eucalc::Check& c) {
  return {{"name", c.name}, {"pass", c.pass}, {"locus", c.locus}, {"detail", c.detail}};
}

std::string report_text(const GermModel& m, const eucalc::ValidationReport& report) {
  std::ostringstream out;
  out << "model: " << m.name() << " (" << m.size() << " strata)\n";
  for (const auto& c : report.checks) {
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.display();
    if (!c.pass && !c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (report.valid() ? "valid\n" : "invalid\n");
  return out.str();
}

/// Computing commands validate first; invalid models never reach the
/// calculus.
GermModel load_valid_model(const std::string& path) {
  GermModel m = eucalc::load_model(path);
  const auto report = eucalc::validate_model(m);
  if (!report.valid()) {
    std::cerr << "model '" << m.name() << "' is invalid:\n";
    for (const auto& c : report.checks)
      if (!c.pass) std::cerr << "  " << c.display() << ": " << c.detail << "\n";
    throw eucalc::InvalidModelError("validation failed");
  }
  return m;
}

std::map<std::string, Int> parse_assignments(const std::string& text,
                                             const std::string& what) {
  std::map<std::string, Int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw eucalc::ParseError(what + ": expected comma-separated id=value pairs, got '" +
                               item + "'");
    const std::string id = item.substr(0, eq);
    try {
      std::size_t used = 0;
      const long long value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out[id] = value;
    } catch (const std::exception&) {
      throw eucalc::ParseError(what + ": '" + item.substr(eq + 1) +
                               "' is not an integer");
    }
  }
  if (out.empty()) throw eucalc::ParseError(what + ": no assignments given");
  return out;
}

/// --alpha gives stratum values (total); --alpha-eu gives Eu-basis
/// coefficients (absent strata contribute 0).
ConstructibleFunction resolve_alpha(const GermModel& m, const std::string& alpha,
                                    const std::string& alpha_eu) {
  if (alpha.empty() == alpha_eu.empty())
    throw eucalc::ParseError("give exactly one of --alpha or --alpha-eu");
  if (!alpha.empty())
    return eucalc::function_from_values(m, parse_assignments(alpha, "--alpha"));
  const auto coeffs = parse_assignments(alpha_eu, "--alpha-eu");
  IntVector c = IntVector::Zero(m.size());
  for (const auto& [id, value] : coeffs) c[m.index_of(id)] = value;
  return eucalc::recompose(eucalc::eu_table(m), c);
}

json id_map(const GermModel& m, const IntVector& v) {
  json out = json::object();
  for (Index i = 0; i < m.size(); ++i) out[m.stratum(i).id] = v[i];
  return out;
}

std::string assignments_text(const GermModel& m, const IntVector& v, bool skip_zero) {
  std::ostringstream out;
  bool first = true;
  for (Index i = 0; i < m.size(); ++i) {
    if (skip_zero && v[i] == 0) continue;
    out << (first ? "" : ", ") << m.stratum(i).id << "=" << v[i];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

int cmd_validate(const std::string& path, const CommonOptions& common) {
  const GermModel m = eucalc::load_model(path);
  const auto report = eucalc::validate_model(m);
  const int status = report.valid() ? exit_pass : exit_check_failed;
  json doc = {{"command", "validate"},
              {"input", path},
              {"model", m.name()},
              {"valid", report.valid()},
              {"checks", json::array()},
              {"status", status}};
  for (const auto& c : report.checks) doc["checks"].push_back(check_to_json(c));
  emit(common, doc, report_text(m, report));
  return status;
}

int cmd_eu(const std::string& path, const std::string& stratum,
           const CommonOptions& common) {
  const GermModel m = load_valid_model(path);

  if (!stratum.empty()) {
    const ConstructibleFunction f = eucalc::eu_function(m, std::string_view(stratum));
    json doc = {{"command", "eu"},      {"input", path},
                {"model", m.name()},    {"stratum", stratum},
                {"function", id_map(m, f)}, {"status", exit_pass}};
    std::ostringstream text;
    text << "model: " << m.name() << "\nEu(cl " << stratum << ", .):\n";
    for (Index i = 0; i < m.size(); ++i)
      text << "  " << std::setw(6) << m.stratum(i).id << "  " << f[i] << "\n";
    emit(common, doc, text.str());
    return exit_pass;
  }

  const eucalc::EuTable table = eucalc::eu_table(m);
  const ConstructibleFunction germ_eu = eucalc::whole_germ_eu(m);
  const Index base = m.base();

  json table_json = json::object();
  for (Index j = 0; j < m.size(); ++j)
    table_json[m.stratum(j).id] = id_map(m, table.M.col(j));
  json doc = {{"command", "eu"},
              {"input", path},
              {"model", m.name()},
              {"table", std::move(table_json)},
              {"eu", id_map(m, germ_eu)},
              {"eu_at_base", germ_eu[base]},
              {"status", exit_pass}};

  std::ostringstream text;
  text << "model: " << m.name() << " (" << m.size() << " strata)\n";
  text << "Eu(cl V_j, V_i); rows i, columns j:\n      ";
  for (Index j = 0; j < m.size(); ++j) text << std::setw(6) << m.stratum(j).id;
  text << "\n";
  for (Index i = 0; i < m.size(); ++i) {
    text << std::setw(6) << m.stratum(i).id;
    for (Index j = 0; j < m.size(); ++j) text << std::setw(6) << table.M(i, j);
    text << "\n";
  }
  text << "Eu(X, .), summed over maximal strata:\n";
  for (Index i = 0; i < m.size(); ++i)
    text << "  " << std::setw(6) << m.stratum(i).id << "  " << germ_eu[i] << "\n";
  text << "Eu(X, 0) = " << germ_eu[base] << "\n";
  emit(common, doc, text.str());
  return exit_pass;
}

int cmd_bls(const std::string& path, const std::string& alpha,
            const std::string& alpha_eu, const std::string& covector, bool is_phi,
            const CommonOptions& common) {
  const GermModel m = load_valid_model(path);
  const ConstructibleFunction a = resolve_alpha(m, alpha, alpha_eu);
  const IntVector coeffs = eucalc::decompose(m, a);
  const eucalc::BlsResult r = eucalc::bls_evaluate(m, a, covector);
  const eucalc::StalkReport stalks = eucalc::stalk_report(m, a, covector);
  const Int phi = stalks.phi_stalk;

  bool have_index = true;
  Int index = 0;
  std::string index_error;
  try {
    index = eucalc::index_pairing(m, a, covector);
  } catch (const eucalc::InsufficientDataError& e) {
    have_index = false;
    index_error = e.what();
  }
  const bool eq8 = have_index && (phi + index == 0);

  // A failed run is a violated contract: an admissible covector with a
  // nonzero defect, or a computable index pairing that misses -phi. For
  // the phi command missing intersection data is itself a failure.
  int status = exit_pass;
  if (r.admissible && r.defect != 0) status = exit_check_failed;
  if (have_index && !eq8) status = exit_check_failed;
  if (is_phi && !have_index) status = exit_check_failed;

  json doc = {{"command", is_phi ? "phi" : "bls"},
              {"input", path},
              {"model", m.name()},
              {"covector", std::string(covector)},
              {"alpha", id_map(m, a)},
              {"coeffs", id_map(m, coeffs)},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"defect", r.defect},
              {"admissible", r.admissible},
              {"phi", phi},
              {"index", have_index ? json(index) : json(nullptr)},
              {"eq8", have_index ? json(eq8) : json(nullptr)},
              {"stalks",
               {{"stalk", stalks.stalk},
                {"costalk", stalks.costalk},
                {"psi_stalk", stalks.psi_stalk},
                {"psi_costalk", stalks.psi_costalk},
                {"phi_stalk", stalks.phi_stalk},
                {"covector", stalks.covector}}},
              {"status", status}};
  if (!have_index) doc["insufficient_data"] = index_error;

  std::ostringstream text;
  text << "model: " << m.name() << "\ncovector: " << covector << "\n";
  text << "alpha:  " << assignments_text(m, a, false) << "\n";
  text << "coeffs: " << assignments_text(m, coeffs, true) << "\n";
  text << "lhs  alpha(0)          = " << r.lhs << "\n";
  text << "rhs  section sum       = " << r.rhs << "\n";
  text << "defect                 = " << r.defect << "\n";
  text << "admissible             = " << (r.admissible ? "yes" : "no") << "\n";
  text << "stalk / costalk        = " << stalks.stalk << " / " << stalks.costalk << "\n";
  text << "psi stalk / costalk    = " << stalks.psi_stalk << " / " << stalks.psi_costalk
       << "\n";
  text << "phi  (vanishing stalk) = " << phi << "\n";
  if (have_index) {
    text << "index pairing          = " << index << "\n";
    text << "eq8  phi + index == 0  : " << (eq8 ? "yes" : "NO") << "\n";
  } else {
    text << "index pairing          : unavailable (" << index_error << ")\n";
  }
  emit(common, doc, text.str());
  return status;
}

int cmd_fuzz(int count, std::uint64_t seed, const CommonOptions& common) {
  eucalc::FuzzOptions options;
  options.count = count;
  options.seed = seed;
  const eucalc::FuzzReport report = eucalc::run_fuzz(options);
  const int status = report.passed() ? exit_pass : exit_check_failed;

  json doc = {{"command", "fuzz"}, {"count", count},
              {"seed", seed},      {"models", report.models},
              {"checks", report.checks}, {"passed", report.passed()},
              {"failure", nullptr}, {"status", status}};
  std::ostringstream text;
  if (report.passed()) {
    text << "fuzz: " << report.models << " models, " << report.checks
         << " checks, seed " << seed << ": all properties hold\n";
  } else {
    const auto& f = *report.failure;
    doc["failure"] = {{"model_seed", f.model_seed},
                      {"property", f.property},
                      {"detail", f.detail},
                      {"model", json::parse(f.model_json)}};
    text << "fuzz: counterexample after " << report.models << " models\n";
    text << "  property:   " << f.property << "\n";
    text << "  model seed: " << f.model_seed << "\n";
    if (!f.detail.empty()) text << "  detail:     " << f.detail << "\n";
    text << "  model dump:\n" << f.model_json << "\n";
  }
  emit(common, doc, text.str());
  return status;
}

int cmd_oracle(const std::string& path, const std::string& op,
               const std::string& vertex, const std::string& minus,
               const CommonOptions& common) {
  const eucalc::SimplicialComplex k = eucalc::load_complex(path);

  auto complex_output = [&](const eucalc::SimplicialComplex& result) {
    json doc = {{"command", "oracle"},
                {"input", path},
                {"op", op},
                {"complex", eucalc::to_json(result)},
                {"status", exit_pass}};
    if (!vertex.empty()) doc["vertex"] = vertex;
    // the bare complex is also the text form, so the output can be piped
    // back into another oracle call
    emit(common, doc, eucalc::to_json(result).dump(2) + "\n");
    return exit_pass;
  };

  if (op == "chi" || op == "chic") {
    Int value = 0;
    if (op == "chi") {
      value = eucalc::chi(k);
    } else {
      eucalc::SimplicialComplex boundary;
      if (!minus.empty()) {
        json faces;
        try {
          faces = json::parse(minus);
        } catch (const json::exception& e) {
          throw eucalc::ParseError(std::string("--minus: ") + e.what());
        }
        json doc = {{"vertices", json::array()}, {"simplices", faces}};
        boundary = eucalc::parse_complex(doc);
      }
      value = eucalc::chi_c(k, boundary);
    }
    json doc = {{"command", "oracle"},
                {"input", path},
                {"op", op},
                {"value", value},
                {"status", exit_pass}};
    emit(common, doc, op + " = " + std::to_string(value) + "\n");
    return exit_pass;
  }
  if (op == "link") {
    if (vertex.empty()) throw eucalc::ParseError("--op link needs --vertex");
    return complex_output(eucalc::vertex_link(k, vertex));
  }
  if (op == "cone") return complex_output(eucalc::cone(k));
  throw eucalc::ParseError("unknown oracle op '" + op + "' (chi|chic|link|cone)");
}

int cmd_examples(const std::string& action, const std::string& name,
                 const CommonOptions& common) {
  if (action == "list") {
    json doc = {{"command", "examples"}, {"action", "list"},
                {"examples", json::array()}, {"status", exit_pass}};
    std::ostringstream text;
    for (const auto& e : eucalc::curated_examples()) {
      doc["examples"].push_back({{"name", e.name},
                                 {"summary", e.summary},
                                 {"eu_at_base", e.expected_eu_base}});
      text << std::setw(14) << e.name << "  " << e.summary << "\n";
    }
    emit(common, doc, text.str());
    return exit_pass;
  }
  if (action == "emit") {
    if (name.empty()) throw eucalc::ParseError("examples emit needs a name");
    if (!eucalc::has_example(name))
      throw eucalc::ParseError("unknown example '" + name + "' (try: examples list)");
    // the emitted document is the model file format itself
    std::cout << eucalc::to_json(eucalc::build_example(name)).dump(2) << "\n";
    return exit_pass;
  }
  throw eucalc::ParseError("unknown examples action '" + action + "' (list|emit)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Euler-obstruction calculus on stratified germ models"};
  app.require_subcommand(1);
  app.fallthrough();  // --json may follow the subcommand

  CommonOptions common;
  app.add_flag("--json", common.as_json, "emit machine-readable JSON");

  std::string path, stratum, alpha, alpha_eu, covector = "generic";
  std::string op, vertex, minus, action, name;
  int count = 200;
  std::uint64_t seed = 42;

  auto* validate = app.add_subcommand("validate", "run every model axiom");
  validate->add_option("model", path, "model file")->required();

  auto* eu = app.add_subcommand("eu", "Euler-obstruction table");
  eu->add_option("model", path, "model file")->required();
  eu->add_option("--stratum", stratum, "only Eu(cl STRATUM, .)");

  auto* bls = app.add_subcommand("bls", "hyperplane-section evaluation");
  bls->add_option("model", path, "model file")->required();
  bls->add_option("--alpha", alpha, "stratum values, e.g. s0=2,s1=1");
  bls->add_option("--alpha-eu", alpha_eu, "Eu-basis coefficients, e.g. s1=1");
  bls->add_option("--covector", covector, "covector class (default: generic)");

  auto* phi = app.add_subcommand("phi", "vanishing-cycle stalk and index pairing");
  phi->add_option("model", path, "model file")->required();
  phi->add_option("--alpha", alpha, "stratum values");
  phi->add_option("--alpha-eu", alpha_eu, "Eu-basis coefficients");
  phi->add_option("--covector", covector, "covector class")->required();

  auto* fuzz = app.add_subcommand("fuzz", "property suites on random models");
  fuzz->add_option("--count", count, "number of models")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", seed, "base seed");

  auto* oracle = app.add_subcommand("oracle", "simplicial brute-force checks");
  oracle->add_option("complex", path, "complex file")->required();
  oracle->add_option("--op", op, "chi|chic|link|cone")->required();
  oracle->add_option("--vertex", vertex, "base vertex for --op link");
  oracle->add_option("--minus", minus, "closed subcomplex (JSON simplex list) for chic");

  auto* examples = app.add_subcommand("examples", "curated germ models");
  examples->add_option("action", action, "list|emit")->required();
  examples->add_option("name", name, "example name for emit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, common);
    if (eu->parsed()) return cmd_eu(path, stratum, common);
    if (bls->parsed()) return cmd_bls(path, alpha, alpha_eu, covector, false, common);
    if (phi->parsed()) return cmd_bls(path, alpha, alpha_eu, covector, true, common);
    if (fuzz->parsed()) return cmd_fuzz(count, seed, common);
    if (oracle->parsed()) return cmd_oracle(path, op, vertex, minus, common);
    if (examples->parsed()) return cmd_examples(action, name, common);
  } catch (const eucalc::InvalidModelError&) {
    return exit_check_failed;
  } catch (const eucalc::InsufficientDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_check_failed;
  } catch (const eucalc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const eucalc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
