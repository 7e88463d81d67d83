#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eucalc/errors.hpp"
#include "eucalc/types.hpp"

namespace eucalc {

struct Stratum {
  std::string id;
  Int dim = 0;          // complex dimension
  bool is_base = false; // the refined point stratum
};

/// Order-insensitive description of a germ model, as read from a file or
/// produced by a constructor. GermModel::create canonicalizes it.
struct ModelSpec {
  struct Covector {
    // Section rows, keyed row id -> { column id -> value }. For a named
    // (non-generic) covector, rows absent from both maps fall back to the
    // generic covector's rows; entries absent from a provided row are 0.
    std::map<std::string, std::map<std::string, Int>> closed;
    std::map<std::string, std::map<std::string, Int>> open;
    std::set<std::string> degenerate;   // the base stratum is implied
    std::map<std::string, Int> mult;    // base defaults to 1
  };

  std::string name;
  std::vector<Stratum> strata;
  std::vector<std::pair<std::string, std::string>> closure;  // (lower, upper)
  std::map<std::string, std::map<std::string, Int>> links;
  std::map<std::string, Covector> covectors;
};

/// One covector class, resolved onto the canonical stratum order. Section
/// matrices are dense with support on strict comparable pairs.
struct CovectorClass {
  std::string name;
  IntMatrix closed;  // NSc
  IntMatrix open;    // NSo
  std::vector<bool> degenerate;
  std::vector<std::optional<Int>> mult;  // nullopt = no intersection datum
};

/// Immutable stratification model: strata in a canonical linear extension
/// (base first, then by complex dimension, input order as tie-break), the
/// closure partial order, link characteristics and covector classes.
class GermModel {
 public:
  /// Canonicalize and index a spec. Throws ModelError on structural
  /// defects: duplicate or dangling ids, negative dimensions, cyclic
  /// closure relation, entries stored off their support.
  static GermModel create(ModelSpec spec);

  const std::string& name() const { return name_; }
  Index size() const { return static_cast<Index>(strata_.size()); }
  const Stratum& stratum(Index i) const { return strata_.at(static_cast<std::size_t>(i)); }
  const std::vector<Stratum>& strata() const { return strata_; }

  bool has_stratum(std::string_view id) const;
  Index index_of(std::string_view id) const;  // throws ModelError

  /// Index of the unique base stratum; throws ModelError when the model
  /// does not have exactly one.
  Index base() const;

  /// V_i contained in cl(V_k); reflexive.
  bool leq(Index i, Index k) const { return leq_(i, k); }
  bool strictly_below(Index i, Index k) const { return i != k && leq_(i, k); }

  const IntMatrix& lk() const { return lk_; }

  bool has_covector(std::string_view name) const;
  const CovectorClass& covector(std::string_view name) const;  // throws ModelError
  const std::map<std::string, CovectorClass, std::less<>>& covectors() const {
    return covectors_;
  }

  /// Transitive reduction of the closure order, as index pairs (lower, upper).
  std::vector<std::pair<Index, Index>> reduction() const;
  std::vector<Index> maximal_strata() const;
  /// { k : V_k contained in cl(V_j) }, ascending.
  std::vector<Index> downset(Index j) const;

  // Copy-with updates; used by tests and the fuzz harness to corrupt data.
  GermModel with_lk(IntMatrix lk) const;
  GermModel with_sections(std::string_view covector, IntMatrix closed,
                          IntMatrix open) const;
  GermModel with_name(std::string name) const;

 private:
  GermModel() = default;

  std::string name_;
  std::vector<Stratum> strata_;
  std::map<std::string, Index, std::less<>> index_;
  BoolGrid leq_;
  IntMatrix lk_;
  std::map<std::string, CovectorClass, std::less<>> covectors_;
};

struct Check {
  std::string name;   // poset, dims, base, lk, sullivan, duality, covector
  bool pass = true;
  std::string locus;  // first offending entity, e.g. "(s0,s1)"
  std::string detail;
  std::string display() const { return name + locus; }
};

struct ValidationReport {
  std::vector<Check> checks;
  bool valid() const;
  const Check* first_failure() const;
};

/// Run every model axiom and report one entry per axiom.
ValidationReport validate_model(const GermModel& m);

/// Throws InvalidModelError naming the first failing check.
void require_valid(const GermModel& m);

/// Deterministic random model for fuzzing: `size` strata over a base
/// stratum, dimensions strictly increasing along the order, section entries
/// in [-3, 3], link entries solved so every Sullivan sum vanishes. The
/// result always passes validate_model.
GermModel generate_random_model(std::uint64_t seed, int size);

/// Sub-model of the germ (cl V_j, 0): keeps the downset of j plus the base,
/// restricting links and sections entrywise.
GermModel restrict_to_closure(const GermModel& m, std::string_view top_id);

// ConstructibleFunction helpers (one value per stratum, canonical order).
ConstructibleFunction constant_function(const GermModel& m, Int value);
ConstructibleFunction indicator(const GermModel& m, const std::vector<std::string>& ids);
ConstructibleFunction basis_function(const GermModel& m, Index j);
/// Total map by id; throws ModelError listing missing or unknown strata.
ConstructibleFunction function_from_values(const GermModel& m,
                                           const std::map<std::string, Int>& values);
std::map<std::string, Int> values_by_id(const GermModel& m,
                                        const ConstructibleFunction& a);

}  // namespace eucalc
