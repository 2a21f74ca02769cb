#include "eqcc/serialization.hpp"

#include <cmath>

#include "eqcc/error.hpp"

namespace eqcc {

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json leaves_json(const std::vector<Leaf>& leaves) {
  json arr = json::array();
  for (const auto& l : leaves) {
    arr.push_back({{"y4", to_json(l.box.y4)},
                   {"A", to_json(l.box.A)},
                   {"verdict", to_string(l.verdict)},
                   {"depth", l.depth}});
  }
  return arr;
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidArgument(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be finite");
  return v;
}

}  // namespace

json to_json(const Interval& x) { return json::array({x.lo(), x.hi()}); }

json to_json(const Box& b) { return {{"y4", to_json(b.y4)}, {"A", to_json(b.A)}}; }

json to_json(const PlanarConfiguration& config) {
  json pts = json::array();
  for (const auto& p : config.points()) pts.push_back({p.x, p.y});
  return pts;
}

json to_json(const MassVector& m) { return json(m.values()); }

json to_json(const ResidualReport& r) {
  json arr = json::array();
  for (const auto& e : r.entries) {
    json item = {{"label", e.label}, {"value", number_or_null(e.value)}};
    if (!e.group.empty()) item["group"] = e.group;
    arr.push_back(item);
  }
  return {{"residuals", arr}, {"max_abs", number_or_null(r.max_abs())}};
}

json to_json(const RootRecord& r) {
  json j = {{"y4", to_json(r.y4)},
            {"y4_mid", r.y4.mid()},
            {"branch", to_string(r.branch)},
            {"sign_type", r.sign_type.name()},
            {"A", r.A},
            {"positive", r.positive},
            {"rank_ratio", number_or_null(r.rank_ratio)},
            {"la_residual", number_or_null(r.la_residual)},
            {"F_ends", {r.F_lo, r.F_hi}}};
  j["masses"] = r.masses ? to_json(*r.masses) : json(nullptr);
  return j;
}

json to_json(const SignTypeWindow& w) {
  return {{"sign_type", SignType{w.kind, {}}.name()},
          {"lo", w.lo},
          {"hi", w.hi},
          {"lo_collision", w.lo_collision},
          {"hi_collision", w.hi_collision}};
}

json to_json(const BifurcationResult& b) {
  json scan = json::array();
  for (const auto& [a, c] : b.scan) scan.push_back({{"A", a}, {"count", c}});
  return {{"A_c", to_json(b.A_c)},
          {"count_below", b.count_below},
          {"count_above", b.count_above},
          {"F_at_pentagon", b.F_at},
          {"dF_at_pentagon", b.dF_at},
          {"scan", scan}};
}

json to_json(const ExclusionCheck& e) {
  return {{"sign_type", SignType{e.kind, {}}.name()},
          {"equation", e.equation},
          {"sign", e.sign},
          {"A", e.A},
          {"points", e.points},
          {"counterexamples", e.counterexamples},
          {"holds", e.holds()}};
}

json to_json(const NoCommonZeroCertificate& c) {
  return {{"kind", "no-common-zero"},
          {"branch", to_string(c.branch)},
          {"region", to_json(c.region)},
          {"status", c.certified ? "certified" : "undecided"},
          {"boxes_processed", c.boxes_processed},
          {"max_depth_reached", c.max_depth_reached},
          {"box_limit_hit", c.box_limit_hit},
          {"leaves", leaves_json(c.leaves)}};
}

json to_json(const UniqueRootCertificate& c) {
  json ends = json::array();
  for (const auto& e : c.endpoints) {
    ends.push_back({{"A", to_json(e.A)}, {"F_lo", to_json(e.F_lo)}, {"F_hi", to_json(e.F_hi)}});
  }
  return {{"kind", "unique-root"},
          {"branch", to_string(c.branch)},
          {"region", {{"y4", to_json(c.window)}, {"A", to_json(c.A)}}},
          {"status", to_string(c.status)},
          {"message", c.message},
          {"derivative_sign", c.derivative_sign},
          {"endpoints", ends},
          {"boxes_processed", c.boxes_processed},
          {"leaves", leaves_json(c.leaves)}};
}

json to_json(const La2Result& r) {
  json eqs = json::array();
  for (const auto& c : r.equations) {
    eqs.push_back({{"equation", "L" + std::to_string(c.i) + std::to_string(c.j)},
                   {"masses", {c.k1, c.k2}},
                   {"coefficients", {c.c1, c.c2}},
                   {"pass", c.pass}});
  }
  return {{"feasible", r.feasible}, {"equations", eqs}};
}

json to_json(const RegionResult& r) {
  json j = {{"region", to_string(r.region)}, {"la2_feasible", r.la2}, {"convex", r.convex}};
  j["interior"] = r.interior ? json(*r.interior) : json(nullptr);
  if (r.region3_conditions) j["region3_conditions"] = *r.region3_conditions;
  return j;
}

json to_json(const tropical::Membership& m) {
  json j = {{"member", m.member}};
  if (!m.member) {
    j["witness"] = {{"index", *m.witness_index},
                    {"label", m.witness_label},
                    {"initial_form", m.witness_form}};
  }
  return j;
}

namespace {

json weight_json(const tropical::WeightVector& w) {
  json arr = json::array();
  for (const auto& x : w.r) arr.push_back(tropical::to_string(x));
  return arr;
}

json members_json(const std::vector<tropical::OrbitMember>& members) {
  json arr = json::array();
  for (const auto& m : members) {
    json item = to_json(m.membership);
    item["weight"] = weight_json(m.w);
    arr.push_back(item);
  }
  return arr;
}

}  // namespace

json to_json(const tropical::TableReport& r) {
  json rays = json::array();
  for (const auto& rr : r.rays) {
    rays.push_back({{"label", rr.label},
                    {"representative", weight_json(rr.representative)},
                    {"multiplicity", rr.multiplicity},
                    {"c5_orbit_size", rr.c5_orbit_size},
                    {"d5_orbit_size", rr.d5_orbit_size},
                    {"multiplicity_matches", rr.multiplicity_matches},
                    {"pass", rr.pass},
                    {"orbit", members_json(rr.members)}});
  }
  json cones = json::array();
  for (const auto& cr : r.cones) {
    cones.push_back({{"label", cr.label},
                     {"interior_point", weight_json(cr.interior)},
                     {"pass", cr.pass},
                     {"orbit", members_json(cr.members)}});
  }
  return {{"A", tropical::to_string(r.A)},
          {"convention", tropical::to_string(r.convention)},
          {"pass", r.pass},
          {"negative_sum_rays", r.negative_sum_rays},
          {"h1_unique_negative", r.h1_unique_negative},
          {"rays", rays},
          {"cones", cones}};
}

ConfigurationInput parse_configuration(const json& j) {
  if (!j.is_object()) throw InvalidArgument("configuration must be a JSON object");
  ConfigurationInput in;
  const bool has_points = j.contains("points");
  const bool has_distances = j.contains("distances");
  if (has_points == has_distances) {
    throw InvalidArgument("configuration needs exactly one of \"points\" or \"distances\"");
  }
  if (has_points) {
    const json& pts = j.at("points");
    if (!pts.is_array() || pts.size() != 5) throw InvalidArgument("\"points\" must hold 5 pairs");
    std::array<Point, 5> p{};
    for (std::size_t i = 0; i < 5; ++i) {
      if (!pts[i].is_array() || pts[i].size() != 2) {
        throw InvalidArgument("each point must be an [x, y] pair");
      }
      p[i] = {finite_number(pts[i][0], "coordinate"), finite_number(pts[i][1], "coordinate")};
    }
    in.config = PlanarConfiguration(p);
  } else {
    const json& d = j.at("distances");
    if (!d.is_array() || d.size() != 6) throw InvalidArgument("\"distances\" must hold 6 reals");
    std::array<double, 6> v{};
    for (std::size_t c = 0; c < 6; ++c) v[c] = finite_number(d[c], "distance");
    in.config = realize_distance_classes(DistanceVector(v));
    in.from_distances = true;
  }
  if (j.contains("masses")) {
    const json& m = j.at("masses");
    if (!m.is_array() || m.size() != 5) throw InvalidArgument("\"masses\" must hold 5 reals");
    std::array<double, 5> v{};
    for (std::size_t k = 0; k < 5; ++k) v[k] = finite_number(m[k], "mass");
    in.masses = MassVector(v);
  }
  if (j.contains("A")) in.A = finite_number(j.at("A"), "A");
  return in;
}

}  // namespace eqcc
