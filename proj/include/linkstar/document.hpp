#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linkstar/construct.hpp"
#include "linkstar/shutter.hpp"
#include "linkstar/verify.hpp"

namespace linkstar::doc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);
Json points_to_json(const std::vector<Point>& pts);
std::vector<Point> points_from_json(const Json& j);
Json oneset_to_json(const OneSet& s);
Json path_to_json(const PathCertificate& c);

Json construction_to_json(const Construction& c);
// Rebuilds the complex from the raw segments; features are checked against it.
Construction construction_from_json(const Json& j);

Json emptiness_to_json(const EmptinessReport& r);
Json witness_to_json(const WitnessReport& r);

Json step_record_to_json(const StepRecord& r);

struct ShutterInput {
  std::vector<Point> K;
  std::vector<KTuple> tuples;
};

Json shutter_input_to_json(const ShutterInput& in);
ShutterInput shutter_input_from_json(const Json& j);

// Parses text; throws MalformedDocument on syntax errors.
Json parse(const std::string& text);
// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace linkstar::doc
