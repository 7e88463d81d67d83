#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "eucalc/germs.hpp"
#include "eucalc/model_json.hpp"

#include "fixtures.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("EUCALC_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "EUCALC_BIN must point at the eucalc binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
    result.output.append(buffer, got);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

class Workspace {
 public:
  Workspace() {
    dir_ = std::filesystem::temp_directory_path() /
           ("eucalc-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~Workspace() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream out(path);
    out << text;
    return path.string();
  }

  std::string write(const std::string& name, const json& doc) const {
    return write(name, doc.dump(2));
  }

 private:
  std::filesystem::path dir_;
};

const Workspace& workspace() {
  static Workspace w;
  return w;
}

std::string node_file() {
  static const std::string path =
      workspace().write("node.json", eucalc::to_json(eucalc::build_example("node")));
  return path;
}

std::string cusp_file() {
  static const std::string path =
      workspace().write("cusp.json", eucalc::to_json(eucalc::build_example("cusp")));
  return path;
}

}  // namespace

TEST_CASE("validate: exit codes and loci") {
  CHECK(run_cli("validate " + node_file()).status == 0);

  auto corrupted = eucalc::to_json(eucalc::build_example("node"));
  corrupted["links"]["s0"]["s1"] = 1;
  const auto bad = workspace().write("corrupted.json", corrupted);
  const auto r = run_cli("validate " + bad);
  CHECK(r.status == 1);
  CHECK(r.output.find("sullivan(s0,s1)") != std::string::npos);

  auto nogeneric = eucalc::to_json(eucalc::build_example("node"));
  nogeneric["covectors"] = json::object();
  const auto ng = workspace().write("nogeneric.json", nogeneric);
  CHECK(run_cli("validate " + ng).status == 1);

  const auto garbage = workspace().write("garbage.json", std::string("{"));
  const auto g = run_cli("validate " + garbage);
  CHECK(g.status == 2);
  CHECK(g.output.find("error") != std::string::npos);

  CHECK(run_cli("validate /no/such/file.json").status == 2);
}

TEST_CASE("validate --json reports every check") {
  const auto r = run_cli("validate " + node_file() + " --json");
  CHECK(r.status == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["command"] == "validate");
  CHECK(doc["valid"] == true);
  CHECK(doc["checks"].size() == 7);
  CHECK(doc["status"] == 0);
}

TEST_CASE("eu") {
  const auto r = run_cli("eu " + node_file() + " --json");
  CHECK(r.status == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["eu_at_base"] == 2);
  CHECK(doc["table"]["s1"]["s0"] == 1);
  CHECK(doc["table"]["s1"]["s2"] == 0);
  CHECK(doc["eu"]["s1"] == 1);

  const auto f = run_cli("eu " + node_file() + " --stratum s1 --json");
  CHECK(f.status == 0);
  const json fdoc = json::parse(f.output);
  CHECK(fdoc["function"]["s0"] == 1);
  CHECK(fdoc["function"]["s2"] == 0);

  // computing commands refuse invalid models
  auto corrupted = eucalc::to_json(eucalc::build_example("node"));
  corrupted["links"]["s0"]["s1"] = 1;
  const auto bad = workspace().write("corrupted-eu.json", corrupted);
  const auto invalid = run_cli("eu " + bad);
  CHECK(invalid.status == 1);
  CHECK(invalid.output.find("sullivan") != std::string::npos);

  CHECK(run_cli("eu " + node_file() + " --stratum zz").status == 2);
}

TEST_CASE("bls on the node indicator") {
  const auto r =
      run_cli("bls " + node_file() + " --alpha s0=1,s1=1,s2=1 --json");
  CHECK(r.status == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["lhs"] == 1);
  CHECK(doc["rhs"] == 2);
  CHECK(doc["defect"] == -1);
  CHECK(doc["admissible"] == false);
  CHECK(doc["coeffs"]["s0"] == -1);
  CHECK(doc["phi"] == 1);
  CHECK(doc["index"] == -1);
  CHECK(doc["eq8"] == true);
  // the stalk report rides along
  CHECK(doc["stalks"]["stalk"] == 1);
  CHECK(doc["stalks"]["costalk"] == 1);
  CHECK(doc["stalks"]["psi_stalk"] == 2);
  CHECK(doc["stalks"]["psi_costalk"] == 2);
  CHECK(doc["stalks"]["phi_stalk"] == 1);
  CHECK(doc["stalks"]["covector"] == "generic");
}

TEST_CASE("bls on the cusp with the degenerate covector") {
  const auto r = run_cli("bls " + cusp_file() +
                         " --alpha s0=2,s1=1 --covector dx --json");
  CHECK(r.status == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["lhs"] == 2);
  CHECK(doc["rhs"] == 3);
  CHECK(doc["defect"] == -1);
  CHECK(doc["admissible"] == false);
  CHECK(doc["phi"] == 1);
  CHECK(doc["index"] == -1);
  CHECK(doc["eq8"] == true);

  // the same function through Eu-basis coefficients
  const auto r2 = run_cli("bls " + cusp_file() + " --alpha-eu s1=1 --json");
  CHECK(r2.status == 0);
  const json doc2 = json::parse(r2.output);
  CHECK(doc2["alpha"]["s0"] == 2);
  CHECK(doc2["defect"] == 0);
  CHECK(doc2["admissible"] == true);

  // exactly one of --alpha/--alpha-eu
  CHECK(run_cli("bls " + cusp_file()).status == 2);
  CHECK(run_cli("bls " + cusp_file() + " --alpha s0=1,s1=1 --alpha-eu s1=1").status == 2);
  // malformed alpha and missing strata
  CHECK(run_cli("bls " + cusp_file() + " --alpha s0=x").status == 2);
  CHECK(run_cli("bls " + cusp_file() + " --alpha s0=1").status == 2);
  CHECK(run_cli("bls " + cusp_file() + " --alpha s0=1,s1=1 --covector dz").status == 2);
}

TEST_CASE("phi requires intersection data") {
  const auto ok = run_cli("phi " + cusp_file() +
                          " --alpha s0=2,s1=1 --covector dx --json");
  CHECK(ok.status == 0);
  const json doc = json::parse(ok.output);
  CHECK(doc["phi"] == 1);
  CHECK(doc["index"] == -1);
  CHECK(doc["eq8"] == true);

  auto gap = eucalc::to_json(eucalc::build_example("cusp"));
  gap["covectors"]["dx"]["mult"].erase("s1");
  const auto path = workspace().write("gap.json", gap);
  const auto r = run_cli("phi " + path + " --alpha s0=2,s1=1 --covector dx");
  CHECK(r.status == 1);
  CHECK(r.output.find("insufficient intersection data") != std::string::npos);

  // the covector option is mandatory for phi
  CHECK(run_cli("phi " + cusp_file() + " --alpha s0=2,s1=1").status == 2);
}

TEST_CASE("fuzz") {
  const auto r = run_cli("fuzz --count 40 --seed 42 --json");
  CHECK(r.status == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["passed"] == true);
  CHECK(doc["models"] == 40);
  CHECK(doc["failure"].is_null());

  // deterministic across runs
  const auto again = run_cli("fuzz --count 40 --seed 42 --json");
  CHECK(json::parse(again.output) == doc);

  CHECK(run_cli("fuzz --count 0").status == 2);
}

TEST_CASE("oracle") {
  const auto annulus = workspace().write("annulus.json",
                                         eucalc::to_json(fixtures::annulus()));
  const auto chi_run = run_cli("oracle " + annulus + " --op chi --json");
  CHECK(chi_run.status == 0);
  CHECK(json::parse(chi_run.output)["value"] == 0);

  // chi_c of the open annulus via an inline boundary subcomplex
  json boundary = json::array();
  for (const auto& f : fixtures::annulus_boundary().maximal_faces()) boundary.push_back(f);
  const auto chic_run = run_cli("oracle " + annulus + " --op chic --minus '" +
                                boundary.dump() + "' --json");
  CHECK(chic_run.status == 0);
  CHECK(json::parse(chic_run.output)["value"] == 0);

  // cone then apex link round-trips the complex
  const auto circle = workspace().write("circle.json",
                                        eucalc::to_json(fixtures::circle(5)));
  const auto cone_run = run_cli("oracle " + circle + " --op cone");
  CHECK(cone_run.status == 0);
  const auto cone_path = workspace().write("cone.json", cone_run.output);
  const auto link_run = run_cli("oracle " + cone_path + " --op link --vertex apex");
  CHECK(link_run.status == 0);
  CHECK(eucalc::parse_complex_text(link_run.output) == fixtures::circle(5));

  CHECK(run_cli("oracle " + annulus + " --op link").status == 2);  // needs --vertex
  CHECK(run_cli("oracle " + annulus + " --op spin").status == 2);
}

TEST_CASE("examples") {
  const auto list = run_cli("examples list --json");
  CHECK(list.status == 0);
  const json doc = json::parse(list.output);
  bool found_node = false;
  for (const auto& e : doc["examples"])
    if (e["name"] == "node") found_node = true;
  CHECK(found_node);

  // emitted models round-trip through validate
  for (const std::string name : {"node", "cusp", "umbrella", "quadric-cone"}) {
    const auto emit = run_cli("examples emit " + name);
    CHECK(emit.status == 0);
    const auto path = workspace().write("emitted-" + name + ".json", emit.output);
    CHECK(run_cli("validate " + path).status == 0);
  }

  CHECK(run_cli("examples emit nope").status == 2);
  CHECK(run_cli("examples dance").status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("validate").status == 2);
}
