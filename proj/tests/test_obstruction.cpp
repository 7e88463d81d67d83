#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "eucalc/fuzz.hpp"
#include "eucalc/germs.hpp"
#include "eucalc/model_json.hpp"
#include "eucalc/obstruction.hpp"
#include "eucalc/rng.hpp"

using namespace eucalc;

namespace {

GermModel node() { return build_example("node"); }
GermModel cusp() { return build_example("cusp"); }

ConstructibleFunction alpha(const GermModel& m, std::map<std::string, Int> values) {
  return function_from_values(m, values);
}

}  // namespace

TEST_CASE("eu_function") {
  const auto m = node();
  const auto eu1 = eu_function(m, std::string_view("s1"));
  CHECK(eu1[0] == 1);
  CHECK(eu1[1] == 1);
  CHECK(eu1[2] == 0);  // off cl(s1)

  // cusp: the multiplicity shows up at the base
  const auto c = cusp();
  const auto euc = eu_function(c, std::string_view("s1"));
  CHECK(euc[0] == 2);
  CHECK(euc[1] == 1);

  // umbrella: the node slice propagates through the axis row
  const auto u = build_example("umbrella");
  const auto euu = eu_function(u, std::string_view("s2"));
  CHECK(euu[u.index_of("s2")] == 1);
  CHECK(euu[u.index_of("s1")] == 2);
  CHECK(euu[u.index_of("s0")] == 1);  // 1*2 + (-1)*1

  // base column is the skyscraper
  const auto skyscraper = eu_function(m, m.base());
  CHECK(skyscraper[0] == 1);
  CHECK(skyscraper[1] == 0);
  CHECK(skyscraper[2] == 0);
}

TEST_CASE("invalid models are rejected by the obstruction layer") {
  const auto m = node();
  IntMatrix lk = m.lk();
  lk(0, 1) = 1;
  const auto bad = m.with_lk(lk);
  CHECK_THROWS_AS(eu_table(bad), InvalidModelError);
  CHECK_THROWS_AS(eu_function(bad, std::string_view("s1")), InvalidModelError);
  CHECK_THROWS_AS(bls_evaluate(bad, constant_function(bad, 1), "generic"),
                  InvalidModelError);
}

TEST_CASE("eu_table") {
  const auto m = node();
  const auto table = eu_table(m);
  CHECK(table.unit_triangular());
  IntMatrix expected(3, 3);
  expected << 1, 1, 1,
              0, 1, 0,
              0, 0, 1;
  CHECK((table.M.array() == expected.array()).all());

  const auto smooth = eu_table(smooth_germ(2));
  CHECK(smooth.M.rows() == 2);
  CHECK(smooth.M(0, 1) == 1);
  CHECK(smooth.unit_triangular());

  // quadric cone: the annulus section kills the base entry
  const auto q = eu_table(build_example("quadric-cone"));
  CHECK(q.M(0, 1) == 0);

  // cc signs are (-1)^dim
  CHECK(table.cc_sign[0] == 1);
  CHECK(table.cc_sign[1] == -1);
  CHECK(eu_table(smooth_germ(2)).cc_sign[1] == 1);
}

TEST_CASE("whole-germ Euler obstruction sums the maximal columns") {
  const auto e = whole_germ_eu(node());
  CHECK(e[0] == 2);
  CHECK(e[1] == 1);
  CHECK(e[2] == 1);

  const auto u = whole_germ_eu(build_example("umbrella"));
  CHECK(u[0] == 1);
  CHECK(u[1] == 2);
  CHECK(u[2] == 1);
}

TEST_CASE("decompose") {
  const auto m = node();
  const auto table = eu_table(m);

  const IntVector c1 = decompose(table, alpha(m, {{"s0", 2}, {"s1", 1}, {"s2", 1}}));
  CHECK(c1[0] == 0);
  CHECK(c1[1] == 1);
  CHECK(c1[2] == 1);

  const IntVector c2 = decompose(table, constant_function(m, 1));
  CHECK(c2[0] == -1);
  CHECK(c2[1] == 1);
  CHECK(c2[2] == 1);

  // basis functions decompose to unit vectors
  for (Index j = 0; j < m.size(); ++j) {
    const IntVector cj = decompose(table, eu_function(m, j));
    for (Index i = 0; i < m.size(); ++i) CHECK(cj[i] == (i == j ? 1 : 0));
  }

  CHECK_THROWS_AS(decompose(table, IntVector::Zero(2)), ModelError);
}

TEST_CASE("decompose and recompose invert each other on random models") {
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto m = generate_random_model(seed, 1 + static_cast<int>(seed % 6));
    const auto table = eu_table(m);
    CHECK(table.unit_triangular());
    const auto a = random_function(m, rng);
    CHECK((recompose(table, decompose(table, a)).array() == a.array()).all());
    IntVector c(m.size());
    for (Index i = 0; i < m.size(); ++i) c[i] = rng.uniform(-5, 5);
    CHECK((decompose(table, recompose(table, c)).array() == c.array()).all());
  }
}

TEST_CASE("characteristic cycle data") {
  const auto m = node();
  const auto sky = cc(m, indicator(m, {"s0"}));
  CHECK(sky.support == std::vector<Index>{0});
  CHECK(sky.coeffs[0] == 1);

  const auto c = cusp();
  const auto cusp_cc = cc(c, alpha(c, {{"s0", 2}, {"s1", 1}}));
  CHECK(cusp_cc.support == std::vector<Index>{1});
  CHECK(cusp_cc.coeffs[1] == -1);  // dim-1 sign

  const auto one = cc(m, constant_function(m, 1));
  CHECK(one.support == std::vector<Index>{0, 1, 2});
  CHECK(one.coeffs[0] == -1);
  CHECK(one.coeffs[1] == -1);
  CHECK(one.coeffs[2] == -1);

  // support is subadditive and the basis functions have singleton support
  Rng rng(17);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = generate_random_model(seed, 5);
    const auto a = random_function(r, rng);
    const auto b = random_function(r, rng);
    const auto sa = cc(r, a).support;
    const auto sb = cc(r, b).support;
    for (Index j : cc(r, a + b).support) {
      const bool in_a = std::find(sa.begin(), sa.end(), j) != sa.end();
      const bool in_b = std::find(sb.begin(), sb.end(), j) != sb.end();
      CHECK((in_a || in_b));
    }
    for (Index j = 0; j < r.size(); ++j) {
      const auto basis = cc(r, eu_function(r, j));
      CHECK(basis.support == std::vector<Index>{j});
    }
  }
}

TEST_CASE("admissibility") {
  const auto c = cusp();
  const auto table = eu_table(c);
  const IntVector supported_on_s1 = decompose(table, alpha(c, {{"s0", 2}, {"s1", 1}}));
  CHECK(is_admissible(c, "generic", supported_on_s1));
  CHECK(!is_admissible(c, "dx", supported_on_s1));

  // any support containing the base is inadmissible for every covector
  const IntVector skyscraper = decompose(table, indicator(c, {"s0"}));
  CHECK(!is_admissible(c, "generic", skyscraper));
  CHECK(!is_admissible(c, "dx", skyscraper));

  CHECK_THROWS_AS(is_admissible(c, "dz", supported_on_s1), ModelError);
}

TEST_CASE("bls_evaluate") {
  const auto m = node();

  const auto thm1 = bls_evaluate(m, alpha(m, {{"s0", 2}, {"s1", 1}, {"s2", 1}}), "generic");
  CHECK(thm1.lhs == 2);
  CHECK(thm1.rhs == 2);
  CHECK(thm1.defect == 0);
  CHECK(thm1.admissible);

  const auto off_span = bls_evaluate(m, constant_function(m, 1), "generic");
  CHECK(off_span.lhs == 1);
  CHECK(off_span.rhs == 2);
  CHECK(off_span.defect == -1);
  CHECK(!off_span.admissible);
  CHECK(off_span.defect == decompose(m, constant_function(m, 1))[0]);

  const auto c = cusp();
  const auto dx = bls_evaluate(c, alpha(c, {{"s0", 2}, {"s1", 1}}), "dx");
  CHECK(dx.lhs == 2);
  CHECK(dx.rhs == 3);
  CHECK(dx.defect == -1);
  CHECK(!dx.admissible);
}

TEST_CASE("generic defect equals the skyscraper coefficient") {
  Rng rng(29);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto m = generate_random_model(seed, 1 + static_cast<int>(seed % 5));
    const auto table = eu_table(m);
    const auto a = random_function(m, rng);
    const auto r = bls_evaluate(m, a, "generic");
    CHECK(r.defect == decompose(table, a)[m.base()]);

    IntVector c(m.size());
    for (Index i = 0; i < m.size(); ++i) c[i] = rng.uniform(-5, 5);
    c[m.base()] = 0;
    const auto span = bls_evaluate(m, recompose(table, c), "generic");
    CHECK(span.defect == 0);
    CHECK(span.admissible);
  }
}

TEST_CASE("index pairing") {
  const auto m = node();
  CHECK(index_pairing(m, indicator(m, {"s0"}), "generic") == 1);
  CHECK(vanishing_stalk(m, indicator(m, {"s0"}), "generic") == -1);

  const auto c = cusp();
  const auto eu = alpha(c, {{"s0", 2}, {"s1", 1}});
  CHECK(index_pairing(c, eu, "dx") == -1);
  CHECK(vanishing_stalk(c, eu, "dx") == 1);
  CHECK(index_pairing(c, eu, "generic") == 0);
  CHECK(vanishing_stalk(c, eu, "generic") == 0);
}

TEST_CASE("missing multiplicities are a hard error, never zero") {
  auto doc = to_json(node());
  doc["covectors"]["skew"] = {
      {"closed", {{"s0", {{"s1", 2}, {"s2", 1}}}}},
      {"open", {{"s0", {{"s1", 2}, {"s2", 1}}}}},
      {"degenerate", {"s1"}},
  };
  const auto m = parse_model(doc);
  REQUIRE(validate_model(m).valid());

  const auto on_s1 = alpha(m, {{"s0", 1}, {"s1", 1}, {"s2", 0}});  // Eu(cl s1)
  CHECK_THROWS_WITH_AS(index_pairing(m, on_s1, "skew"),
                       doctest::Contains("insufficient intersection data"),
                       InsufficientDataError);
  CHECK_THROWS_AS(check_eq8(m, on_s1, "skew"), InsufficientDataError);

  // functions supported away from the gap still pair fine
  const auto on_s2 = alpha(m, {{"s0", 1}, {"s1", 0}, {"s2", 1}});  // Eu(cl s2)
  CHECK(index_pairing(m, on_s2, "skew") == 0);
}

TEST_CASE("eq8") {
  const auto m = node();
  CHECK(check_eq8(m, indicator(m, {"s0"}), "generic"));

  const auto c = cusp();
  const auto eu = alpha(c, {{"s0", 2}, {"s1", 1}});
  CHECK(check_eq8(c, eu, "dx"));
  CHECK(check_eq8(c, eu, "generic"));

  Rng rng(31);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto r = generate_random_model(seed, 4);
    CHECK(check_eq8(r, random_function(r, rng), "generic"));
  }
}
