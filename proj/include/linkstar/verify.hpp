#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linkstar/construct.hpp"
#include "linkstar/linkvis.hpp"

namespace linkstar {

enum class WitnessMethod { ProofFormula, Exhaustive };

struct WitnessReport {
  std::vector<Point> tuple;
  // assigned[i]: index of the class C_j chosen for tuple[i].
  std::vector<int> assigned;
  int untouched = 0;
  Point witness;
  std::vector<PathCertificate> paths;
  WitnessMethod method = WitnessMethod::ProofFormula;
};

struct EmptinessReport {
  std::vector<Point> targets;
  std::size_t n = 0;
  std::vector<OneSet> per_target_regions;
  // intersection_trace[i] = regions[0] n ... n regions[i].
  std::vector<OneSet> intersection_trace;

  const OneSet& final_set() const { return intersection_trace.back(); }
  bool empty() const { return final_set().empty(); }
};

// Index m such that a_m is joined to b_i for every i != untouched.
int proof_witness_index(int k, int untouched);

// Witness for a k-tuple via the formula vertex; falls back to an exhaustive
// search (method = Exhaustive) only if the formula witness fails. Throws
// VerificationFailed if neither yields certificates of at most n links.
WitnessReport verify_star1(const Construction& c, std::span<const Point> tuple);

// Left fold of the n-link regions of `targets`.
EmptinessReport emptiness_trace(const Construction& c, std::span<const Point> targets);

// Trace over all k+1 endpoints e_i; throws VerificationFailed if non-empty.
EmptinessReport verify_star2(const Construction& c);

// Deterministic points on the complex.
std::vector<Point> sample_on_complex(const SegmentComplex& c, std::size_t count, std::uint64_t seed);

}  // namespace linkstar
