#include "linkstar/document.hpp"

#include "linkstar/error.hpp"

namespace linkstar::doc {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedDocument, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) malformed(std::string("field '") + name + "' is not an integer");
  return v.get<int>();
}

void check_header(const Json& j, const char* kind) {
  const Json& v = field(j, "schema_version");
  if (!v.is_string() || v.get<std::string>() != kSchemaVersion) malformed("unsupported schema_version");
  const Json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) malformed(std::string("expected kind '") + kind + "'");
}

Json header(const char* kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

}  // namespace

Json point_to_json(const Point& p) { return Json::array({p.x.str(), p.y.str()}); }

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    malformed("point must be a pair of rational strings");
  }
  try {
    return {Rat::parse(j[0].get<std::string>()), Rat::parse(j[1].get<std::string>())};
  } catch (const Error& e) {
    malformed(e.what());
  }
}

Json points_to_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const Point& p : pts) out.push_back(point_to_json(p));
  return out;
}

std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected a list of points");
  std::vector<Point> out;
  for (const Json& p : j) out.push_back(point_from_json(p));
  return out;
}

Json oneset_to_json(const OneSet& s) {
  Json segs = Json::array();
  for (const Segment& seg : s.segments()) segs.push_back(Json::array({point_to_json(seg.p()), point_to_json(seg.q())}));
  Json out;
  out["segments"] = std::move(segs);
  out["points"] = points_to_json(s.points());
  return out;
}

Json path_to_json(const PathCertificate& c) {
  Json out;
  out["links"] = c.links();
  out["vertices"] = points_to_json(c.vertices);
  return out;
}

Json construction_to_json(const Construction& c) {
  Json j = header("construction");
  j["n"] = c.n;
  j["k"] = c.k;
  j["kappa"] = c.polygon.kappa;
  j["seed"] = c.polygon.seed;
  j["polygon_retry_count"] = c.polygon.retry_count;
  j["gamma_retry_count"] = c.gamma_retry_count;
  Json verts = Json::array();
  for (std::size_t v = 0; v < c.polygon.vertices.size(); ++v) {
    Json e;
    e["label"] = (v % 2 == 0 ? "a" : "b") + std::to_string(v / 2);
    e["point"] = point_to_json(c.polygon.vertices[v]);
    verts.push_back(std::move(e));
  }
  j["vertices"] = std::move(verts);
  Json segs = Json::array();
  for (const LabeledSegment& s : c.raw) {
    Json e;
    e["feature"] = s.feature.label();
    e["p"] = point_to_json(s.segment.p());
    e["q"] = point_to_json(s.segment.q());
    segs.push_back(std::move(e));
  }
  j["segments"] = std::move(segs);
  j["midpoints"] = points_to_json(c.c);
  Json gamma = Json::array();
  for (const auto& g : c.gamma) gamma.push_back(points_to_json(g));
  j["gamma"] = std::move(gamma);
  j["endpoints"] = points_to_json(c.e);
  return j;
}

Construction construction_from_json(const Json& j) {
  check_header(j, "construction");
  const int n = int_field(j, "n");
  const int k = int_field(j, "k");
  if (n < 2 || k < 2) malformed("n and k must be >= 2");
  const auto count = static_cast<std::size_t>(k) + 1;

  PolygonSpec poly;
  poly.k = k;
  poly.kappa = k / 2;
  if (int_field(j, "kappa") != poly.kappa) malformed("kappa must equal floor(k/2)");
  const Json& seed = field(j, "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) malformed("seed must be an integer");
  poly.seed = seed.get<std::uint64_t>();
  poly.retry_count = int_field(j, "polygon_retry_count");
  const Json& verts = field(j, "vertices");
  if (!verts.is_array() || verts.size() != 2 * count) malformed("expected 2k+2 vertices");
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const std::string want = (v % 2 == 0 ? "a" : "b") + std::to_string(v / 2);
    const Json& label = field(verts[v], "label");
    if (!label.is_string() || label.get<std::string>() != want) malformed("vertex " + std::to_string(v) + " must be " + want);
    poly.vertices.push_back(point_from_json(field(verts[v], "point")));
  }

  std::vector<LabeledSegment> raw;
  const Json& segs = field(j, "segments");
  if (!segs.is_array() || segs.empty()) malformed("segments must be a non-empty list");
  for (const Json& s : segs) {
    const Json& f = field(s, "feature");
    if (!f.is_string()) malformed("feature must be a string");
    const Feature feature = Feature::parse(f.get<std::string>());
    if (feature.index < 0 || feature.index > k) malformed("feature index out of range: " + f.get<std::string>());
    try {
      raw.push_back({Segment(point_from_json(field(s, "p")), point_from_json(field(s, "q"))), feature});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::MalformedDocument) throw;
      malformed(e.what());
    }
  }

  std::vector<Point> c = points_from_json(field(j, "midpoints"));
  std::vector<Point> e = points_from_json(field(j, "endpoints"));
  std::vector<std::vector<Point>> gamma;
  const Json& g = field(j, "gamma");
  if (!g.is_array()) malformed("gamma must be a list");
  for (const Json& path : g) gamma.push_back(points_from_json(path));
  if (c.size() != count || e.size() != count || gamma.size() != count) {
    malformed("midpoints, gamma and endpoints need k+1 entries");
  }
  for (std::size_t i = 0; i < count; ++i) {
    const auto& path = gamma[i];
    if (n == 2 ? !path.empty() : (path.size() != static_cast<std::size_t>(n) - 1 || path.front() != c[i])) {
      malformed("gamma path " + std::to_string(i) + " has the wrong shape");
    }
    if (e[i] != (n == 2 ? c[i] : path.back())) malformed("endpoint " + std::to_string(i) + " does not match gamma");
  }

  Construction out = Construction::assemble(n, std::move(poly), std::move(raw), std::move(c), std::move(gamma),
                                            std::move(e), int_field(j, "gamma_retry_count"));
  for (std::size_t i = 0; i < count; ++i) {
    if (!out.complex.contains_point(out.c[i]) || !out.complex.contains_point(out.e[i])) {
      malformed("feature point " + std::to_string(i) + " is not on the complex");
    }
  }
  return out;
}

Json emptiness_to_json(const EmptinessReport& r) {
  Json j;
  j["n"] = r.n;
  j["targets"] = points_to_json(r.targets);
  Json regions = Json::array();
  for (const OneSet& s : r.per_target_regions) regions.push_back(oneset_to_json(s));
  j["per_target_regions"] = std::move(regions);
  Json trace = Json::array();
  for (const OneSet& s : r.intersection_trace) trace.push_back(oneset_to_json(s));
  j["intersection_trace"] = std::move(trace);
  j["final"] = oneset_to_json(r.final_set());
  j["empty"] = r.empty();
  return j;
}

Json witness_to_json(const WitnessReport& r) {
  Json j;
  j["tuple"] = points_to_json(r.tuple);
  j["assigned"] = r.assigned;
  j["untouched"] = r.untouched;
  j["witness"] = point_to_json(r.witness);
  j["method"] = r.method == WitnessMethod::ProofFormula ? "proof-formula" : "exhaustive";
  Json paths = Json::array();
  for (const PathCertificate& p : r.paths) paths.push_back(path_to_json(p));
  j["paths"] = std::move(paths);
  return j;
}

Json step_record_to_json(const StepRecord& r) {
  Json j;
  j["step"] = r.step;
  j["tuple"] = points_to_json(r.tuple);
  j["dangerous_points"] = r.dangerous_points;
  j["horizontal_pairs"] = r.horizontal_pairs;
  j["added_B"] = points_to_json(r.added_B);
  j["chosen_z"] = point_to_json(r.chosen_z);
  j["added_A"] = points_to_json(r.added_A);
  j["A_size"] = r.a_size;
  j["B_size"] = r.b_size;
  Json v;
  v["A_B_disjoint"] = r.verdicts.disjoint;
  v["A_growth_bound"] = r.verdicts.growth_bound;
  v["witnesses_valid"] = r.verdicts.witnesses_valid;
  v["no_common_viewer_of_K"] = r.verdicts.no_common_viewer;
  j["invariants"] = std::move(v);
  return j;
}

Json shutter_input_to_json(const ShutterInput& in) {
  Json j = header("shutter_input");
  j["K"] = points_to_json(in.K);
  Json tuples = Json::array();
  for (const KTuple& t : in.tuples) tuples.push_back(points_to_json(t.points()));
  j["tuples"] = std::move(tuples);
  return j;
}

ShutterInput shutter_input_from_json(const Json& j) {
  check_header(j, "shutter_input");
  ShutterInput in;
  in.K = points_from_json(field(j, "K"));
  if (j.contains("tuples")) {
    const Json& tuples = j.at("tuples");
    if (!tuples.is_array()) malformed("tuples must be a list");
    for (const Json& t : tuples) {
      try {
        in.tuples.emplace_back(points_from_json(t));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::MalformedDocument) throw;
        malformed(e.what());
      }
    }
  }
  return in;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace linkstar::doc
