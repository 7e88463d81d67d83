#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "eucalc/model.hpp"
#include "eucalc/simplicial.hpp"

namespace eucalc {

/// Parse the model file format. Throws ParseError on malformed documents
/// (bad JSON, unknown keys, wrong types) and ModelError on structural
/// defects inside a well-formed document.
GermModel parse_model(const nlohmann::json& doc);
GermModel parse_model_text(const std::string& text);
GermModel load_model(const std::filesystem::path& path);

/// Canonical serialization; parse_model round-trips it.
nlohmann::json to_json(const GermModel& m);

/// Complex file format: vertices, maximal simplices, optional tags grouped
/// by stratum label.
SimplicialComplex parse_complex(const nlohmann::json& doc);
SimplicialComplex parse_complex_text(const std::string& text);
SimplicialComplex load_complex(const std::filesystem::path& path);
nlohmann::json to_json(const SimplicialComplex& k);

}  // namespace eucalc
