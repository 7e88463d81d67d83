#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "eucalc/model.hpp"
#include "eucalc/rng.hpp"

namespace eucalc {

struct FuzzOptions {
  int count = 100;
  std::uint64_t seed = 42;
  int max_size = 6;
  int functions_per_model = 10;
  /// Test hook: applied to each generated model before the property run,
  /// so a deliberately broken build of the identities is caught.
  std::function<GermModel(const GermModel&)> mutate;
};

struct FuzzFailure {
  std::uint64_t model_seed = 0;
  std::string property;
  std::string detail;
  std::string model_json;  // full dump of the counterexample
};

struct FuzzReport {
  int models = 0;
  long long checks = 0;
  std::optional<FuzzFailure> failure;
  bool passed() const { return !failure.has_value(); }
};

/// Random function with entries in [-5, 5].
ConstructibleFunction random_function(const GermModel& m, Rng& rng);

/// Drive the algebraic property suites over generate_random_model:
/// validation, Eu-table triangularity, decompose/recompose round-trips,
/// the hyperplane-section identity for admissible functions, the
/// defect-equals-base-coefficient identity, section duality, principal
/// closure link sums, the index pairing, linearity, and restriction.
/// Deterministic in (seed, count); stops at the first counterexample.
FuzzReport run_fuzz(const FuzzOptions& options);

}  // namespace eucalc
