#pragma once

// Triangulated test spaces shared by the unit suites and the acceptance
// runner. Everything here is built from maximal faces; the complex
// constructor computes the closures.

#include <string>
#include <vector>

#include "eucalc/simplicial.hpp"

namespace fixtures {

using eucalc::Int;
using eucalc::SimplicialComplex;

/// k isolated vertices p0..p(k-1).
inline SimplicialComplex points(int k, const std::string& prefix = "p") {
  std::vector<std::string> vertices;
  for (int i = 0; i < k; ++i) vertices.push_back(prefix + std::to_string(i));
  return SimplicialComplex(vertices, {});
}

/// Cycle on n >= 3 vertices.
inline SimplicialComplex circle(int n = 6, const std::string& prefix = "c") {
  std::vector<SimplicialComplex::NamedSimplex> faces;
  for (int i = 0; i < n; ++i)
    faces.push_back({prefix + std::to_string(i), prefix + std::to_string((i + 1) % n)});
  return SimplicialComplex({}, faces);
}

/// Two disjoint circles (the link of a node germ).
inline SimplicialComplex two_circles() {
  std::vector<SimplicialComplex::NamedSimplex> faces;
  for (const auto& k : {circle(6, "a"), circle(6, "b")})
    for (const auto& f : k.maximal_faces()) faces.push_back(f);
  return SimplicialComplex({}, faces);
}

/// Disk: cone over circle(n) with the apex named by cone().
inline SimplicialComplex disk(int n = 6) { return eucalc::cone(circle(n)); }

/// Single edge and its two endpoints.
inline SimplicialComplex interval() { return SimplicialComplex({}, {{"e0", "e1"}}); }
inline SimplicialComplex interval_endpoints() {
  return SimplicialComplex({"e0", "e1"}, {});
}

/// Solid simplex on n + 1 vertices: a PL n-ball.
inline SimplicialComplex ball(int n, const std::string& prefix = "v") {
  SimplicialComplex::NamedSimplex top;
  for (int i = 0; i <= n; ++i) top.push_back(prefix + std::to_string(i));
  return SimplicialComplex({}, {top});
}

/// Boundary of the solid (n+1)-simplex: a PL n-sphere.
inline SimplicialComplex sphere(int n, const std::string& prefix = "v") {
  std::vector<SimplicialComplex::NamedSimplex> faces;
  for (int skip = 0; skip <= n + 1; ++skip) {
    SimplicialComplex::NamedSimplex f;
    for (int i = 0; i <= n + 1; ++i)
      if (i != skip) f.push_back(prefix + std::to_string(i));
    faces.push_back(std::move(f));
  }
  return SimplicialComplex({}, faces);
}

/// Annulus as circle x interval, with product vertex names.
inline SimplicialComplex annulus(int n = 6) {
  return eucalc::product(circle(n), interval());
}

/// The two boundary circles of annulus(n), named compatibly.
inline SimplicialComplex annulus_boundary(int n = 6) {
  std::vector<SimplicialComplex::NamedSimplex> faces;
  for (const std::string end : {"e0", "e1"})
    for (int i = 0; i < n; ++i)
      faces.push_back({eucalc::product_vertex_name("c" + std::to_string(i), end),
                       eucalc::product_vertex_name("c" + std::to_string((i + 1) % n), end)});
  return SimplicialComplex({}, faces);
}

/// Closed Milnor fiber of a generic linear form on the pinch-point surface:
/// a triangulated disk (3 x 6 vertex grid) with two interior vertices glued
/// into the node vertex "p". Tags: "s1" on the node point, "s2" elsewhere.
/// The two glued vertices share no neighbor, so the quotient is again a
/// simplicial complex and the alternating counts compute the quotient space.
inline SimplicialComplex nodal_disk() {
  const int cols = 6, rows = 3;
  auto name = [&](int x, int y) -> std::string {
    if (y == 1 && (x == 1 || x == 4)) return "p";
    return "g" + std::to_string(x) + "_" + std::to_string(y);
  };
  std::vector<SimplicialComplex::NamedSimplex> faces;
  for (int x = 0; x + 1 < cols; ++x) {
    for (int y = 0; y + 1 < rows; ++y) {
      faces.push_back({name(x, y), name(x + 1, y), name(x + 1, y + 1)});
      faces.push_back({name(x, y), name(x + 1, y + 1), name(x, y + 1)});
    }
  }
  SimplicialComplex untagged({}, faces);
  std::map<std::string, std::vector<SimplicialComplex::NamedSimplex>> tags;
  for (const auto& s : untagged.simplices()) {
    const auto f = untagged.named(s);
    const bool is_node = (f.size() == 1 && f[0] == "p");
    tags[is_node ? "s1" : "s2"].push_back(f);
  }
  return SimplicialComplex({}, faces, tags);
}

}  // namespace fixtures
