#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eucalc/errors.hpp"
#include "eucalc/types.hpp"

namespace eucalc {

/// Finite abstract simplicial complex used as the brute-force oracle for
/// Euler characteristics, links and cones. Simplices are stored downward
/// closed; construction takes maximal faces and computes the closure.
///
/// Simplices may carry a stratum tag. Tags must be face-closed: every face
/// of a tagged simplex is tagged (possibly with a different label), so each
/// label's downward closure is a closed subcomplex.
class SimplicialComplex {
 public:
  using Simplex = std::vector<int>;                 // sorted vertex indices
  using NamedSimplex = std::vector<std::string>;    // vertex names, any order

  SimplicialComplex() = default;

  /// Build from named maximal faces. Every name in `vertices` becomes a
  /// 0-simplex even when no listed face contains it; faces may use names
  /// not present in `vertices`. Tags map a label to the exact simplices
  /// carrying it.
  SimplicialComplex(
      std::vector<std::string> vertices,
      const std::vector<NamedSimplex>& faces,
      const std::map<std::string, std::vector<NamedSimplex>>& tags = {});

  Index vertex_count() const { return static_cast<Index>(names_.size()); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::set<Simplex>& simplices() const { return simplices_; }

  bool has_vertex(std::string_view name) const;
  int vertex_index(std::string_view name) const;  // throws ModelError
  const std::string& vertex_name(int index) const { return names_.at(index); }

  bool contains(const NamedSimplex& face) const;
  NamedSimplex named(const Simplex& s) const;
  std::vector<NamedSimplex> maximal_faces() const;

  bool tagged() const { return !tags_.empty(); }
  std::optional<std::string> tag_of(const Simplex& s) const;
  /// Labels in first-use order.
  std::vector<std::string> tag_labels() const;

  bool operator==(const SimplicialComplex& other) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
  std::set<Simplex> simplices_;
  std::map<Simplex, std::string> tags_;
};

/// Alternating simplex count: chi(K) = sum over simplices of (-1)^dim.
/// For a closed complex this is the ordinary Euler characteristic.
Int chi(const SimplicialComplex& k);

/// chi_c of the locally closed difference A \ B, with B a closed
/// subcomplex of A: chi(A) - chi(B). Throws ModelError when B is not
/// contained in A.
Int chi_c(const SimplicialComplex& a, const SimplicialComplex& b);

/// chi_c of the union of simplices carrying `label`, as the alternating
/// sum over exactly those simplices.
Int chi_c_tagged(const SimplicialComplex& k, std::string_view label);

/// Link of a vertex: { s : v not in s, s + {v} in K }. Simplices inherit
/// the tag of s + {v}.
SimplicialComplex vertex_link(const SimplicialComplex& k, std::string_view vertex);

/// Cone: a fresh apex joined to every simplex. chi(cone(K)) = 1. Tags are
/// dropped (the apex breaks any stratum semantics).
SimplicialComplex cone(const SimplicialComplex& k);

/// Name of the apex vertex chosen by cone().
std::string cone_apex_name(const SimplicialComplex& k);

/// Staircase triangulation of |K| x |L| with respect to the two vertex
/// orders; vertex (a, b) is named with product_vertex_name. Tags dropped.
SimplicialComplex product(const SimplicialComplex& k, const SimplicialComplex& l);
std::string product_vertex_name(std::string_view a, std::string_view b);

/// Full subcomplex on a vertex subset. Tags restricted.
SimplicialComplex induced(const SimplicialComplex& k,
                          const std::vector<std::string>& vertices);

/// A claim about one LK/NS entry of a germ model, recomputed from an
/// explicit triangulation.
struct EntryClaim {
  enum class Kind { Link, SectionClosed, SectionOpen };
  Kind kind = Kind::SectionClosed;
  std::string vertex;    // Link: the base vertex whose link is taken
  std::string stratum;   // optional tag label; empty = whole complex
  std::optional<SimplicialComplex> minus;  // SectionOpen: closed boundary part
  Int expected = 0;
};

/// Recompute the claimed quantity. Link: chi_c of the (tagged part of the)
/// vertex link. SectionClosed: ordinary chi of a closed subcomplex; refuses
/// non-closed tagged parts. SectionOpen: chi_c, either as chi(K) - chi(minus)
/// or as the tagged alternating sum.
Int recompute_entry(const SimplicialComplex& k, const EntryClaim& claim);

bool verify_model_entry(const SimplicialComplex& k, const EntryClaim& claim);

}  // namespace eucalc
