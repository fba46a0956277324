#pragma once

// JSON input documents, the built-in catalog, and canonical rational encoding.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kstab/rational.hpp"
#include "kstab/toric_fano.hpp"

namespace kstab {

using ojson = nlohmann::ordered_json;

/// {"name": ..., "rays": [[...], ...]} or {"name": ..., "polytope_vertices": [[...], ...]}.
/// Rationals may be JSON integers or "p/q" strings.
struct InputDocument {
  std::string name;
  std::optional<std::vector<LatticeVec>> rays;
  std::optional<std::vector<RatVec>> polytope_vertices;
};

/// Throws MalformedInput on schema violations.
InputDocument parse_input_document(const nlohmann::json& j);
InputDocument parse_input_text(std::string_view text);

/// Builds X. For polytope input, rays are the primitive inward facet normals of
/// the polytope (each facet must read <v, m> >= -1) and the polytope must equal
/// the section polytope they induce; otherwise NotFano.
ToricFano realize(const InputDocument& doc);

ojson to_json(const InputDocument& doc);
InputDocument document_for(const ToricFano& x);

ojson rational_json(const Rat& r);
Rat rational_from_json(const nlohmann::json& j);
ojson rational_vector_json(const RatVec& v);

std::vector<std::string> catalog_names();
/// Throws UnknownName.
InputDocument catalog_entry(std::string_view name);
std::string catalog_description(std::string_view name);

}  // namespace kstab
