#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "linkstar/kernel.hpp"

namespace linkstar {

// Finite set of points on the x-axis, keyed by abscissa, remembering
// insertion order.
class AxisSet {
 public:
  AxisSet() = default;
  explicit AxisSet(std::span<const Point> points);

  // Returns false when already present. Throws PreconditionViolated off-axis.
  bool insert(const Point& p);
  bool contains(const Point& p) const { return p.y.is_zero() && set_.contains(p.x); }
  bool contains_x(const Rat& x) const { return set_.contains(x); }

  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }
  Point at(std::size_t i) const { return {order_.at(i), Rat(0)}; }
  const std::vector<Rat>& abscissae() const { return order_; }
  std::vector<Point> points() const;

 private:
  std::vector<Rat> order_;
  std::unordered_set<Rat> set_;
};

// k distinct points strictly below the x-axis.
class KTuple {
 public:
  explicit KTuple(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<Point> points_;
};

struct HistoryEntry {
  KTuple tuple;
  Point witness;
};

struct InvariantVerdicts {
  bool disjoint = true;
  bool growth_bound = true;
  bool witnesses_valid = true;
  bool no_common_viewer = true;

  bool all() const { return disjoint && growth_bound && witnesses_valid && no_common_viewer; }
};

struct StepRecord {
  std::size_t step = 0;
  std::vector<Point> tuple;
  // Dangerous upper points processed this step.
  std::size_t dangerous_points = 0;
  std::vector<Point> added_B;
  Point chosen_z;
  std::vector<Point> added_A;
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  // Pairs of K spanning a horizontal line (init record only).
  std::size_t horizontal_pairs = 0;
  InvariantVerdicts verdicts;
};

struct ShutterState {
  int k = 0;
  std::vector<Point> K;
  AxisSet A;
  AxisSet B;
  std::size_t b0_size = 0;
  std::vector<HistoryEntry> history;
  std::size_t step = 0;
  // Prefix of A whose lines through K have already been intersected pairwise;
  // dangerous points among them were neutralized in an earlier step.
  std::size_t z_frontier = 0;
};

// Crossing of [z, y] with the axis if it belongs to A. Requires z strictly
// above and y strictly below the axis (SameSideInput otherwise).
std::optional<Point> sees_via(const Point& z, const Point& y, const AxisSet& A);

ShutterState shutter_init(std::span<const Point> K, const KTuple& first, StepRecord* record = nullptr);
ShutterState shutter_step(ShutterState s, const KTuple& tuple, StepRecord* record = nullptr);

// Exact search for an upper point seeing all of K via A.
std::optional<Point> exists_common_viewer_of_K(const ShutterState& s);

InvariantVerdicts check_invariants(const ShutterState& s);

struct ShutterRun {
  ShutterState state;
  std::vector<StepRecord> log;
};

// shutter_init on tuples[0], then shutter_step on each further tuple.
// `on_record` sees each record as soon as it is produced.
ShutterRun shutter_run(std::span<const Point> K, std::span<const KTuple> tuples,
                       const std::function<void(const StepRecord&)>& on_record = {});

// Visibility through T = upper half-plane u A u lower half-plane.
bool sees_through_T(const Point& x, const Point& y, const AxisSet& A);

// Seeded inputs: k+1 points for K, and `count` k-tuples.
std::vector<Point> seeded_K(int k, std::uint64_t seed);
std::vector<KTuple> seeded_tuples(int k, std::size_t count, std::uint64_t seed);

}  // namespace linkstar
