#include "eucalc/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace eucalc {

namespace {

std::string face_text(const std::vector<std::string>& names) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ' ';
    out << names[i];
  }
  out << ']';
  return out.str();
}

Int sign_of(const SimplicialComplex::Simplex& s) {
  return (s.size() % 2 == 1) ? 1 : -1;  // (-1)^dim, dim = |s| - 1
}

}  // namespace

SimplicialComplex::SimplicialComplex(
    std::vector<std::string> vertices,
    const std::vector<NamedSimplex>& faces,
    const std::map<std::string, std::vector<NamedSimplex>>& tags) {
  auto intern = [&](const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
  };

  for (const auto& v : vertices) intern(v);

  auto to_simplex = [&](const NamedSimplex& face) {
    Simplex s;
    s.reserve(face.size());
    for (const auto& v : face) s.push_back(intern(v));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };

  // Every declared vertex is a point of the complex.
  for (int v = 0; v < static_cast<int>(names_.size()); ++v)
    simplices_.insert(Simplex{v});

  // Insert faces and their downward closure (subset enumeration).
  for (const auto& face : faces) {
    const Simplex s = to_simplex(face);
    if (s.empty()) continue;
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex sub;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t{1} << b)) sub.push_back(s[b]);
      simplices_.insert(std::move(sub));
    }
  }

  for (const auto& [label, tagged] : tags) {
    for (const auto& face : tagged) {
      Simplex s = to_simplex(face);
      if (!simplices_.count(s))
        throw ModelError("tag '" + label + "' names simplex " + face_text(face) +
                         " which is not in the complex");
      tags_[std::move(s)] = label;
    }
  }

  // Tags must be face-closed.
  for (const auto& [s, label] : tags_) {
    if (s.size() < 2) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s[i]);
      if (!tags_.count(face))
        throw ModelError("tagged simplex " + face_text(named(s)) +
                         " has an untagged face " + face_text(named(face)));
    }
  }
}

bool SimplicialComplex::has_vertex(std::string_view name) const {
  return index_.find(name) != index_.end();
}

int SimplicialComplex::vertex_index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw ModelError("unknown vertex '" + std::string(name) + "'");
  return it->second;
}

bool SimplicialComplex::contains(const NamedSimplex& face) const {
  Simplex s;
  for (const auto& v : face) {
    auto it = index_.find(v);
    if (it == index_.end()) return false;
    s.push_back(it->second);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return simplices_.count(s) != 0;
}

SimplicialComplex::NamedSimplex SimplicialComplex::named(const Simplex& s) const {
  NamedSimplex out;
  out.reserve(s.size());
  for (int v : s) out.push_back(names_.at(v));
  return out;
}

std::vector<SimplicialComplex::NamedSimplex> SimplicialComplex::maximal_faces() const {
  std::vector<NamedSimplex> out;
  for (const auto& s : simplices_) {
    bool maximal = true;
    // s is non-maximal iff some coface s + {v} is present.
    for (int v = 0; v < static_cast<int>(names_.size()) && maximal; ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      Simplex bigger = s;
      bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
      if (simplices_.count(bigger)) maximal = false;
    }
    if (maximal) out.push_back(named(s));
  }
  return out;
}

std::optional<std::string> SimplicialComplex::tag_of(const Simplex& s) const {
  auto it = tags_.find(s);
  if (it == tags_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> SimplicialComplex::tag_labels() const {
  std::vector<std::string> out;
  for (const auto& [s, label] : tags_)
    if (std::find(out.begin(), out.end(), label) == out.end()) out.push_back(label);
  return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  auto name_set = [](const SimplicialComplex& k) {
    std::set<std::string> out(k.names_.begin(), k.names_.end());
    return out;
  };
  auto simplex_set = [](const SimplicialComplex& k) {
    std::set<NamedSimplex> out;
    for (const auto& s : k.simplices_) {
      NamedSimplex f = k.named(s);
      std::sort(f.begin(), f.end());
      out.insert(std::move(f));
    }
    return out;
  };
  auto tag_set = [](const SimplicialComplex& k) {
    std::set<std::pair<NamedSimplex, std::string>> out;
    for (const auto& [s, label] : k.tags_) {
      NamedSimplex f = k.named(s);
      std::sort(f.begin(), f.end());
      out.emplace(std::move(f), label);
    }
    return out;
  };
  return name_set(*this) == name_set(other) &&
         simplex_set(*this) == simplex_set(other) && tag_set(*this) == tag_set(other);
}

Int chi(const SimplicialComplex& k) {
  Int total = 0;
  for (const auto& s : k.simplices()) total += sign_of(s);
  return total;
}

Int chi_c(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (const auto& s : b.simplices()) {
    if (!a.contains(b.named(s)))
      throw ModelError("chi_c: subtracted part contains simplex " +
                       face_text(b.named(s)) + " outside the ambient complex");
  }
  return chi(a) - chi(b);
}

Int chi_c_tagged(const SimplicialComplex& k, std::string_view label) {
  Int total = 0;
  for (const auto& s : k.simplices()) {
    const auto tag = k.tag_of(s);
    if (tag && *tag == label) total += sign_of(s);
  }
  return total;
}

SimplicialComplex vertex_link(const SimplicialComplex& k, std::string_view vertex) {
  const int v = k.vertex_index(vertex);
  std::vector<SimplicialComplex::NamedSimplex> faces;
  std::map<std::string, std::vector<SimplicialComplex::NamedSimplex>> tags;
  for (const auto& s : k.simplices()) {
    if (!std::binary_search(s.begin(), s.end(), v)) continue;
    SimplicialComplex::Simplex rest;
    for (int w : s)
      if (w != v) rest.push_back(w);
    if (rest.empty()) continue;
    faces.push_back(k.named(rest));
    if (auto tag = k.tag_of(s)) tags[*tag].push_back(k.named(rest));
  }
  return SimplicialComplex({}, faces, tags);
}

std::string cone_apex_name(const SimplicialComplex& k) {
  std::string name = "apex";
  while (k.has_vertex(name)) name += "'";
  return name;
}

SimplicialComplex cone(const SimplicialComplex& k) {
  const std::string apex = cone_apex_name(k);
  std::vector<SimplicialComplex::NamedSimplex> faces;
  faces.push_back({apex});
  for (const auto& face : k.maximal_faces()) {
    auto joined = face;
    joined.push_back(apex);
    faces.push_back(std::move(joined));
  }
  std::vector<std::string> vertices = k.vertices();
  return SimplicialComplex(std::move(vertices), faces);
}

std::string product_vertex_name(std::string_view a, std::string_view b) {
  return std::string(a) + "|" + std::string(b);
}

SimplicialComplex product(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<SimplicialComplex::NamedSimplex> faces;

  // Monotone staircase paths through sigma x tau, with respect to the two
  // global vertex orders. Consistent on shared faces, so the union over
  // maximal face pairs triangulates |K| x |L|.
  for (const auto& sigma : k.maximal_faces()) {
    for (const auto& tau : l.maximal_faces()) {
      std::vector<int> si, ti;
      for (const auto& a : sigma) si.push_back(k.vertex_index(a));
      for (const auto& b : tau) ti.push_back(l.vertex_index(b));
      std::sort(si.begin(), si.end());
      std::sort(ti.begin(), ti.end());
      const std::size_t p = si.size() - 1, q = ti.size() - 1;

      std::vector<int> steps(p + q, 0);  // 0 = advance in sigma, 1 = in tau
      std::fill(steps.begin() + static_cast<long>(p), steps.end(), 1);
      std::sort(steps.begin(), steps.end());
      do {
        SimplicialComplex::NamedSimplex cell;
        std::size_t i = 0, j = 0;
        cell.push_back(product_vertex_name(k.vertex_name(si[0]), l.vertex_name(ti[0])));
        for (int step : steps) {
          if (step == 0)
            ++i;
          else
            ++j;
          cell.push_back(product_vertex_name(k.vertex_name(si[i]), l.vertex_name(ti[j])));
        }
        faces.push_back(std::move(cell));
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  }
  return SimplicialComplex({}, faces);
}

SimplicialComplex induced(const SimplicialComplex& k,
                          const std::vector<std::string>& vertices) {
  std::set<int> keep;
  for (const auto& v : vertices) keep.insert(k.vertex_index(v));
  std::vector<SimplicialComplex::NamedSimplex> faces;
  std::map<std::string, std::vector<SimplicialComplex::NamedSimplex>> tags;
  std::vector<std::string> names;
  for (int v : keep) names.push_back(k.vertex_name(v));
  for (const auto& s : k.simplices()) {
    if (!std::all_of(s.begin(), s.end(), [&](int v) { return keep.count(v); }))
      continue;
    faces.push_back(k.named(s));
    if (auto tag = k.tag_of(s)) tags[*tag].push_back(k.named(s));
  }
  return SimplicialComplex(std::move(names), faces, tags);
}

Int recompute_entry(const SimplicialComplex& k, const EntryClaim& claim) {
  switch (claim.kind) {
    case EntryClaim::Kind::Link: {
      if (claim.vertex.empty())
        throw ModelError("link claim needs a base vertex");
      const SimplicialComplex link = vertex_link(k, claim.vertex);
      if (claim.stratum.empty()) return chi(link);
      return chi_c_tagged(link, claim.stratum);
    }
    case EntryClaim::Kind::SectionClosed: {
      if (claim.stratum.empty()) return chi(k);
      // The tagged part must be a closed subcomplex to report ordinary chi.
      Int total = 0;
      for (const auto& s : k.simplices()) {
        const auto tag = k.tag_of(s);
        if (!tag || *tag != claim.stratum) continue;
        if (s.size() >= 2) {
          for (std::size_t skip = 0; skip < s.size(); ++skip) {
            SimplicialComplex::Simplex face;
            for (std::size_t i = 0; i < s.size(); ++i)
              if (i != skip) face.push_back(s[i]);
            const auto face_tag = k.tag_of(face);
            if (!face_tag || *face_tag != claim.stratum)
              throw ModelError("closed-section claim: tagged part '" + claim.stratum +
                               "' is not a closed subcomplex");
          }
        }
        total += (s.size() % 2 == 1) ? 1 : -1;
      }
      return total;
    }
    case EntryClaim::Kind::SectionOpen: {
      if (claim.minus) return chi_c(k, *claim.minus);
      if (!claim.stratum.empty()) return chi_c_tagged(k, claim.stratum);
      return chi(k);
    }
  }
  throw ModelError("unreachable claim kind");
}

bool verify_model_entry(const SimplicialComplex& k, const EntryClaim& claim) {
  return recompute_entry(k, claim) == claim.expected;
}

}  // namespace eucalc
