#include <json.hpp>

#include "eqcc/error.hpp"
#include "eqcc/tropical.hpp"
#include "eqcc/tropical_tables_data.hpp"

namespace eqcc::tropical {

namespace {

SymbolicRay parse_ray(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 6) throw InvalidArgument("table ray must have 6 entries");
  SymbolicRay ray;
  for (std::size_t c = 0; c < 6; ++c) {
    const auto& e = j[c];
    if (e.is_number_integer()) ray[c] = AffineA{Rational(e.get<long long>()), 0};
    else if (e.is_string()) ray[c] = AffineA::parse(e.get<std::string>());
    else throw InvalidArgument("table entries must be integers or affine strings in A");
  }
  return ray;
}

}  // namespace

RayTable RayTable::parse(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("ray table is not valid JSON: ") + e.what());
  }
  RayTable t;
  t.version = doc.value("version", 0);
  for (const auto& r : doc.at("rays")) {
    t.rays.push_back({r.at("label").get<std::string>(), parse_ray(r.at("representative")),
                      r.at("multiplicity").get<int>()});
  }
  for (const auto& c : doc.at("cones")) {
    ConeClass cc;
    cc.label = c.at("label").get<std::string>();
    for (const auto& ray : c.at("rays")) cc.rays.push_back(parse_ray(ray));
    t.cones.push_back(std::move(cc));
  }
  return t;
}

const RayTable& RayTable::shipped() {
  static const RayTable table = parse(detail::kTropicalTablesJson);
  return table;
}

}  // namespace eqcc::tropical
