#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eucalc/model.hpp"

namespace eucalc {

/// Origin-row override for one extra covector class of a curve germ.
struct CurveCovector {
  std::map<std::string, Int> closed_row;  // branch id -> section chi
  std::set<std::string> degenerate;       // besides the base stratum
  std::map<std::string, Int> mult;        // intersection numbers
};

/// Smooth d-dimensional germ: one stratum over the base, section chi 1.
GermModel smooth_germ(Int d);

/// Curve germ with one dim-1 stratum per branch; branch b is named
/// "s<b+1>" and its generic section is mults[b] points. Extra covectors
/// override the origin row.
GermModel curve_germ(const std::vector<Int>& mults,
                     const std::map<std::string, CurveCovector>& extra_covectors = {});

/// One projective stratum of the base of a cone.
struct ConeStratum {
  std::string id;
  Int chi_y = 0;    // chi of the projective stratum's closure piece Y
  Int chi_yh = 0;   // chi of Y cut by a generic hyperplane
  Int dim = 0;      // projective dimension; the cone stratum has dim + 1
};

/// Cone over projective data: NSc[0][cone stratum] = chi(Y) - chi(Y cap H),
/// link pieces fibered in circles so all LK entries vanish. Cone strata
/// form an antichain.
GermModel cone_over(const std::vector<ConeStratum>& proj);

/// Whitney-umbrella shaped model: base, a dim-1 singular axis with a node
/// normal slice (NS[1][2] = 2), and a dim-2 top stratum whose generic
/// origin section has chi = section_chi.
GermModel whitney_umbrella(Int section_chi);

/// Product with a smooth d-dimensional factor: non-base dimensions shift
/// by d, all section and link data unchanged, so the whole Eu table is
/// preserved.
GermModel thicken(const GermModel& m, Int d);

enum class Provenance { Trivial, Derived };

struct ProvenanceNote {
  std::string entry;      // which data entry the note covers
  Provenance provenance;
  std::string oracle;     // required for Derived entries
};

struct ExampleDescriptor {
  std::string name;
  std::string summary;
  Int expected_eu_base = 0;  // Eu(X, 0) of the whole germ
  std::vector<ProvenanceNote> notes;
  std::function<GermModel()> build;
};

/// The golden corpus. Every derived entry names the oracle that certified
/// it; the unit tests recompute each one.
const std::vector<ExampleDescriptor>& curated_examples();

bool has_example(const std::string& name);
const ExampleDescriptor& example_descriptor(const std::string& name);  // throws ModelError
GermModel build_example(const std::string& name);

}  // namespace eucalc
