#include "kstab/document.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>

#include "kstab/error.hpp"

namespace kstab {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

std::int64_t integer_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    malformed("integer out of range: " + j.dump());
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const Rat r = parse_rational(j.get<std::string>());
    if (is_integer(r) && abs(numerator(r)) <= Int(INT64_MAX)) return numerator(r).convert_to<std::int64_t>();
  }
  malformed("expected an integer, got " + j.dump());
}

struct CatalogEntry {
  const char* name;
  const char* description;
  std::vector<LatticeVec> rays;
};

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"P1", "projective line", {{1}, {-1}}},
      {"P2", "projective plane", {{1, 0}, {0, 1}, {-1, -1}}},
      {"P1xP1", "product of two lines", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}},
      {"F1", "blow-up of P2 at a point", {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}},
      {"dP7", "blow-up of P2 at two points", {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {-1, -1}}},
      {"dP6", "blow-up of P2 at three points", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}}},
      {"P3", "projective 3-space", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}},
      {"P(1,1,3)", "weighted projective plane", {{1, 0}, {0, 1}, {-1, -3}}},
  };
  return entries;
}

}  // namespace

ojson rational_json(const Rat& r) { return to_string(r); }

Rat rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  malformed("expected an integer or \"p/q\" string, got " + j.dump());
}

ojson rational_vector_json(const RatVec& v) {
  ojson out = ojson::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

InputDocument parse_input_document(const nlohmann::json& j) {
  if (!j.is_object()) malformed("input document must be a JSON object");
  InputDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) malformed("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  const bool has_rays = j.contains("rays");
  const bool has_poly = j.contains("polytope_vertices");
  if (has_rays == has_poly) malformed("exactly one of \"rays\" and \"polytope_vertices\" is required");

  const auto& rows = has_rays ? j["rays"] : j["polytope_vertices"];
  if (!rows.is_array() || rows.empty()) malformed("vector list must be a nonempty array");
  std::size_t dim = 0;
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) malformed("each vector must be a nonempty array");
    if (dim == 0) dim = row.size();
    if (row.size() != dim) malformed("vectors must share one dimension");
  }
  if (has_rays) {
    std::vector<LatticeVec> rays;
    for (const auto& row : rows) {
      LatticeVec v;
      for (const auto& c : row) v.push_back(integer_from_json(c));
      rays.push_back(std::move(v));
    }
    doc.rays = std::move(rays);
  } else {
    std::vector<RatVec> verts;
    for (const auto& row : rows) {
      RatVec v;
      for (const auto& c : row) v.push_back(rational_from_json(c));
      verts.push_back(std::move(v));
    }
    doc.polytope_vertices = std::move(verts);
  }
  return doc;
}

InputDocument parse_input_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return parse_input_document(j);
}

ToricFano realize(const InputDocument& doc) {
  if (doc.rays) return build(*doc.rays, doc.name);
  Polytope p = [&] {
    try {
      return convex_hull(*doc.polytope_vertices);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotFullDimensional) throw Error(ErrorCode::NotFano, e.what());
      throw;
    }
  }();
  std::vector<LatticeVec> rays;
  for (const auto& f : p.facets()) {
    if (f.offset != -1) throw Error(ErrorCode::NotFano, "polytope facet is not of the form <v, m> >= -1 with v primitive");
    LatticeVec v;
    for (const auto& c : f.normal) v.push_back(numerator(c).convert_to<std::int64_t>());
    rays.push_back(std::move(v));
  }
  std::sort(rays.begin(), rays.end());
  ToricFano x = build(rays, doc.name);
  if (!(x.section_polytope() == p)) throw Error(ErrorCode::NotFano, "polytope differs from the section polytope of its fan");
  return x;
}

ojson to_json(const InputDocument& doc) {
  ojson out;
  if (!doc.name.empty()) out["name"] = doc.name;
  if (doc.rays) {
    ojson rows = ojson::array();
    for (const auto& r : *doc.rays) rows.push_back(r);
    out["rays"] = std::move(rows);
  } else if (doc.polytope_vertices) {
    ojson rows = ojson::array();
    for (const auto& v : *doc.polytope_vertices) rows.push_back(rational_vector_json(v));
    out["polytope_vertices"] = std::move(rows);
  }
  return out;
}

InputDocument document_for(const ToricFano& x) { return InputDocument{x.name(), x.rays(), std::nullopt}; }

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.emplace_back(e.name);
  return out;
}

InputDocument catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (name == e.name) return InputDocument{e.name, e.rays, std::nullopt};
  }
  throw Error(ErrorCode::UnknownName, "no catalog entry named '" + std::string(name) + "'");
}

std::string catalog_description(std::string_view name) {
  for (const auto& e : catalog()) {
    if (name == e.name) return e.description;
  }
  throw Error(ErrorCode::UnknownName, "no catalog entry named '" + std::string(name) + "'");
}

}  // namespace kstab
