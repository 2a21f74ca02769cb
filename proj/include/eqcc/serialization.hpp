#pragma once

#include <optional>

#include <json.hpp>

#include "eqcc/certify.hpp"
#include "eqcc/equations.hpp"
#include "eqcc/geometry.hpp"
#include "eqcc/interval.hpp"
#include "eqcc/symmetric.hpp"
#include "eqcc/tropical.hpp"

namespace eqcc {

using json = nlohmann::json;

json to_json(const Interval& x);
json to_json(const Box& b);
json to_json(const PlanarConfiguration& config);
json to_json(const MassVector& m);
json to_json(const ResidualReport& r);
json to_json(const RootRecord& r);
json to_json(const SignTypeWindow& w);
json to_json(const BifurcationResult& b);
json to_json(const ExclusionCheck& e);
json to_json(const NoCommonZeroCertificate& c);
json to_json(const UniqueRootCertificate& c);
json to_json(const La2Result& r);
json to_json(const RegionResult& r);
json to_json(const tropical::Membership& m);
json to_json(const tropical::TableReport& r);

// {"points": [[x, y] x5]} or {"distances": [6 reals]}, optional "masses"
// (5 reals) and "A". Throws InvalidArgument on malformed input.
struct ConfigurationInput {
  PlanarConfiguration config;
  bool from_distances = false;
  std::optional<MassVector> masses;
  std::optional<double> A;
};

ConfigurationInput parse_configuration(const json& j);

}  // namespace eqcc
