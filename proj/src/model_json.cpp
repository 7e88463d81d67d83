#include "eucalc/model_json.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace eucalc {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ParseError("unknown key '" + it.key() + "' in " + where);
  }
}

const json& require_key(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing key '" + key + "' in " + where);
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a string");
  return v.get<std::string>();
}

Int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + " must be an integer");
  return v.get<Int>();
}

std::map<std::string, std::map<std::string, Int>> parse_rows(const json& obj,
                                                             const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object of rows");
  std::map<std::string, std::map<std::string, Int>> rows;
  for (auto row = obj.begin(); row != obj.end(); ++row) {
    if (!row.value().is_object())
      throw ParseError(where + "." + row.key() + " must be an object");
    auto& out = rows[row.key()];
    for (auto cell = row.value().begin(); cell != row.value().end(); ++cell)
      out[cell.key()] = as_int(cell.value(), where + "." + row.key() + "." + cell.key());
  }
  return rows;
}

}  // namespace

GermModel parse_model(const json& doc) {
  if (!doc.is_object()) throw ParseError("model document must be a JSON object");
  reject_unknown_keys(doc, {"name", "strata", "closure", "links", "covectors"}, "model");

  ModelSpec spec;
  spec.name = as_string(require_key(doc, "name", "model"), "model.name");

  const json& strata = require_key(doc, "strata", "model");
  if (!strata.is_array()) throw ParseError("model.strata must be an array");
  for (const json& entry : strata) {
    if (!entry.is_object()) throw ParseError("each stratum must be an object");
    reject_unknown_keys(entry, {"id", "dim", "base"}, "stratum");
    Stratum s;
    s.id = as_string(require_key(entry, "id", "stratum"), "stratum.id");
    s.dim = as_int(require_key(entry, "dim", "stratum '" + s.id + "'"), "stratum.dim");
    if (auto it = entry.find("base"); it != entry.end()) {
      if (!it->is_boolean()) throw ParseError("stratum.base must be a boolean");
      s.is_base = it->get<bool>();
    }
    spec.strata.push_back(std::move(s));
  }

  const json& closure = require_key(doc, "closure", "model");
  if (!closure.is_array()) throw ParseError("model.closure must be an array of pairs");
  for (const json& pair : closure) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("each closure entry must be a [lower, upper] pair");
    spec.closure.emplace_back(as_string(pair[0], "closure pair"),
                              as_string(pair[1], "closure pair"));
  }

  spec.links = parse_rows(require_key(doc, "links", "model"), "links");

  const json& covectors = require_key(doc, "covectors", "model");
  if (!covectors.is_object()) throw ParseError("model.covectors must be an object");
  for (auto it = covectors.begin(); it != covectors.end(); ++it) {
    const json& cov = it.value();
    if (!cov.is_object())
      throw ParseError("covector '" + it.key() + "' must be an object");
    reject_unknown_keys(cov, {"closed", "open", "degenerate", "mult"},
                        "covector '" + it.key() + "'");
    ModelSpec::Covector raw;
    if (auto c = cov.find("closed"); c != cov.end())
      raw.closed = parse_rows(*c, "covector '" + it.key() + "'.closed");
    if (auto o = cov.find("open"); o != cov.end())
      raw.open = parse_rows(*o, "covector '" + it.key() + "'.open");
    if (auto d = cov.find("degenerate"); d != cov.end()) {
      if (!d->is_array())
        throw ParseError("covector '" + it.key() + "'.degenerate must be an array");
      for (const json& id : *d) raw.degenerate.insert(as_string(id, "degenerate id"));
    }
    if (auto mu = cov.find("mult"); mu != cov.end()) {
      if (!mu->is_object())
        throw ParseError("covector '" + it.key() + "'.mult must be an object");
      for (auto cell = mu->begin(); cell != mu->end(); ++cell)
        raw.mult[cell.key()] = as_int(cell.value(), "mult." + cell.key());
    }
    spec.covectors.emplace(it.key(), std::move(raw));
  }

  return GermModel::create(std::move(spec));
}

GermModel parse_model_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_model(doc);
}

GermModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path.string() + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_model_text(text);
}

json to_json(const GermModel& m) {
  json doc;
  doc["name"] = m.name();

  json strata = json::array();
  for (Index i = 0; i < m.size(); ++i) {
    json s;
    s["id"] = m.stratum(i).id;
    s["dim"] = m.stratum(i).dim;
    if (m.stratum(i).is_base) s["base"] = true;
    strata.push_back(std::move(s));
  }
  doc["strata"] = std::move(strata);

  json closure = json::array();
  for (const auto& [i, k] : m.reduction())
    closure.push_back(json::array({m.stratum(i).id, m.stratum(k).id}));
  doc["closure"] = std::move(closure);

  json links = json::object();
  for (Index i = 0; i < m.size(); ++i)
    for (Index k = 0; k < m.size(); ++k)
      if (m.leq(i, k) && m.lk()(i, k) != 0)
        links[m.stratum(i).id][m.stratum(k).id] = m.lk()(i, k);
  doc["links"] = std::move(links);

  json covectors = json::object();
  for (const auto& [name, cov] : m.covectors()) {
    json c;
    json closed = json::object();
    json open = json::object();
    for (Index i = 0; i < m.size(); ++i)
      for (Index k = 0; k < m.size(); ++k)
        if (m.strictly_below(i, k)) {
          closed[m.stratum(i).id][m.stratum(k).id] = cov.closed(i, k);
          open[m.stratum(i).id][m.stratum(k).id] = cov.open(i, k);
        }
    c["closed"] = std::move(closed);
    c["open"] = std::move(open);
    json degenerate = json::array();
    for (Index j = 0; j < m.size(); ++j)
      if (cov.degenerate[static_cast<std::size_t>(j)]) degenerate.push_back(m.stratum(j).id);
    c["degenerate"] = std::move(degenerate);
    json mult = json::object();
    for (Index j = 0; j < m.size(); ++j)
      if (cov.mult[static_cast<std::size_t>(j)])
        mult[m.stratum(j).id] = *cov.mult[static_cast<std::size_t>(j)];
    c["mult"] = std::move(mult);
    covectors[name] = std::move(c);
  }
  doc["covectors"] = std::move(covectors);

  return doc;
}

SimplicialComplex parse_complex(const json& doc) {
  if (!doc.is_object()) throw ParseError("complex document must be a JSON object");
  reject_unknown_keys(doc, {"vertices", "simplices", "tags"}, "complex");

  auto vertex_name = [](const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<Int>());
    throw ParseError("vertex ids must be strings or integers");
  };

  std::vector<std::string> vertices;
  const json& vs = require_key(doc, "vertices", "complex");
  if (!vs.is_array()) throw ParseError("complex.vertices must be an array");
  for (const json& v : vs) vertices.push_back(vertex_name(v));

  auto parse_faces = [&](const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + " must be an array of simplices");
    std::vector<SimplicialComplex::NamedSimplex> faces;
    for (const json& face : arr) {
      if (!face.is_array()) throw ParseError(where + " entries must be arrays");
      SimplicialComplex::NamedSimplex f;
      for (const json& v : face) f.push_back(vertex_name(v));
      faces.push_back(std::move(f));
    }
    return faces;
  };

  const auto faces = parse_faces(require_key(doc, "simplices", "complex"),
                                 "complex.simplices");

  std::map<std::string, std::vector<SimplicialComplex::NamedSimplex>> tags;
  if (auto t = doc.find("tags"); t != doc.end()) {
    if (!t->is_object()) throw ParseError("complex.tags must be an object");
    for (auto it = t->begin(); it != t->end(); ++it)
      tags[it.key()] = parse_faces(it.value(), "tags." + it.key());
  }

  return SimplicialComplex(std::move(vertices), faces, tags);
}

SimplicialComplex parse_complex_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_complex(doc);
}

SimplicialComplex load_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open complex file '" + path.string() + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_complex_text(text);
}

json to_json(const SimplicialComplex& k) {
  json doc;
  doc["vertices"] = k.vertices();
  json simplices = json::array();
  for (const auto& face : k.maximal_faces()) simplices.push_back(face);
  doc["simplices"] = std::move(simplices);
  if (k.tagged()) {
    json tags = json::object();
    for (const auto& s : k.simplices())
      if (auto label = k.tag_of(s)) tags[*label].push_back(k.named(s));
    doc["tags"] = std::move(tags);
  }
  return doc;
}

}  // namespace eucalc
