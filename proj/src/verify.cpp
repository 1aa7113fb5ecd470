#include "linkstar/verify.hpp"

#include <algorithm>

#include "linkstar/error.hpp"
#include "linkstar/rng.hpp"

namespace linkstar {

int proof_witness_index(int k, int untouched) {
  if (k < 2 || untouched < 0 || untouched > k) {
    throw Error(ErrorCode::IndexOutOfRange, "untouched index " + std::to_string(untouched) + " for k = " + std::to_string(k));
  }
  return wrap_index(untouched - k / 2, k);
}

namespace {

std::optional<std::vector<PathCertificate>> certify_all(const Construction& c, const Point& z,
                                                        std::span<const Point> tuple) {
  std::vector<PathCertificate> paths;
  const auto n = static_cast<std::size_t>(c.n);
  for (const Point& x : tuple) {
    auto cert = n_visible(c.complex, z, x, n);
    if (!cert || !certificate_valid(c.complex, *cert, z, x, n)) return std::nullopt;
    paths.push_back(std::move(*cert));
  }
  return paths;
}

}  // namespace

WitnessReport verify_star1(const Construction& c, std::span<const Point> tuple) {
  if (tuple.size() != static_cast<std::size_t>(c.k)) {
    throw Error(ErrorCode::WrongArity, "expected " + std::to_string(c.k) + " points, got " + std::to_string(tuple.size()));
  }
  WitnessReport report;
  report.tuple.assign(tuple.begin(), tuple.end());
  std::vector<bool> touched(static_cast<std::size_t>(c.k) + 1, false);
  for (const Point& x : tuple) {
    const auto cls = c.class_of(x);
    if (!cls) throw Error(ErrorCode::TupleNotOnComplex, x.str());
    report.assigned.push_back(*cls);
    touched[static_cast<std::size_t>(*cls)] = true;
  }
  // k points meet at most k of the k+1 classes.
  report.untouched = static_cast<int>(std::find(touched.begin(), touched.end(), false) - touched.begin());
  report.witness = c.polygon.a(proof_witness_index(c.k, report.untouched));
  if (auto paths = certify_all(c, report.witness, tuple)) {
    report.paths = std::move(*paths);
    return report;
  }
  report.method = WitnessMethod::Exhaustive;
  const auto z = common_viewer(c.complex, tuple, static_cast<std::size_t>(c.n));
  if (z) {
    if (auto paths = certify_all(c, *z, tuple)) {
      report.witness = *z;
      report.paths = std::move(*paths);
      return report;
    }
  }
  throw Error(ErrorCode::VerificationFailed, "no common viewer for tuple starting " + tuple.front().str());
}

EmptinessReport emptiness_trace(const Construction& c, std::span<const Point> targets) {
  if (targets.empty()) throw Error(ErrorCode::EmptyInput, "no targets");
  EmptinessReport report;
  report.targets.assign(targets.begin(), targets.end());
  report.n = static_cast<std::size_t>(c.n);
  for (const Point& t : targets) {
    report.per_target_regions.push_back(link_region(c.complex, t, report.n).region);
    if (report.intersection_trace.empty()) {
      report.intersection_trace.push_back(report.per_target_regions.back());
    } else {
      report.intersection_trace.push_back(
          oneset_intersect(report.intersection_trace.back(), report.per_target_regions.back()));
    }
  }
  return report;
}

EmptinessReport verify_star2(const Construction& c) {
  EmptinessReport report = emptiness_trace(c, c.e);
  if (!report.empty()) {
    throw Error(ErrorCode::VerificationFailed,
                "endpoints share a viewer at " + report.final_set().least_point()->str());
  }
  return report;
}

std::vector<Point> sample_on_complex(const SegmentComplex& c, std::size_t count, std::uint64_t seed) {
  constexpr long kSteps = 64;
  SplitMix64 rng(seed);
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(c.size()) - 1));
    const Rat t(static_cast<long>(rng.range(0, kSteps)), kSteps);
    const Segment& s = c.segment(idx);
    out.push_back(lerp(s.p(), s.q(), t));
  }
  return out;
}

}  // namespace linkstar
