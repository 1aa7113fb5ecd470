#include "linkstar/shutter.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "linkstar/error.hpp"
#include "linkstar/rng.hpp"

namespace linkstar {

namespace {

constexpr long kSweepLimit = 10'000'000;

bool upper(const Point& p) { return p.y.sign() > 0; }
bool lower(const Point& p) { return p.y.sign() < 0; }

// Crossing of [z, y] with the axis for z above and y below.
Point crossing(const Point& z, const Point& y) { return *axis_crossing_between(z, y); }

// Meeting point above the axis of line((sa, 0), ya) and line((sb, 0), yb),
// for distinct abscissae and points ya, yb strictly below the axis.
std::optional<Point> meet_above(const Rat& sa, const Point& ya, const Rat& sb, const Point& yb) {
  const Rat dax = ya.x - sa;
  const Rat dbx = yb.x - sb;
  const Rat det = dax * yb.y - ya.y * dbx;
  if (det.is_zero()) return std::nullopt;
  // (sa, 0) + t (ya - (sa, 0)) lies above the axis iff t < 0.
  const Rat t = (sb - sa) * yb.y / det;
  if (t.sign() >= 0) return std::nullopt;
  return Point{sa + t * dax, t * ya.y};
}

void validate_K(std::span<const Point> K) {
  if (K.size() < 3) throw Error(ErrorCode::DegenerateK, "K needs k+1 >= 3 points");
  std::set<Point> seen;
  for (const Point& y : K) {
    if (!lower(y)) throw Error(ErrorCode::DegenerateK, "K point not strictly below the axis: " + y.str());
    if (!seen.insert(y).second) throw Error(ErrorCode::DegenerateK, "repeated K point " + y.str());
  }
}

[[noreturn]] void violation(const ShutterState& s, const InvariantVerdicts& v) {
  std::ostringstream msg;
  msg << "step " << s.step << ":";
  if (!v.disjoint) msg << " A and B intersect;";
  if (!v.growth_bound) msg << " |A| = " << s.A.size() << " exceeds growth bound;";
  if (!v.witnesses_valid) msg << " a stored witness no longer sees its tuple;";
  if (!v.no_common_viewer) msg << " K has a common viewer at " << exists_common_viewer_of_K(s)->str() << ";";
  throw Error(ErrorCode::InvariantViolation, msg.str());
}

StepRecord finish(ShutterState& s, const KTuple& tuple, StepRecord rec) {
  rec.step = s.step;
  rec.tuple = tuple.points();
  rec.a_size = s.A.size();
  rec.b_size = s.B.size();
  rec.verdicts = check_invariants(s);
  return rec;
}

}  // namespace

AxisSet::AxisSet(std::span<const Point> points) {
  for (const Point& p : points) insert(p);
}

bool AxisSet::insert(const Point& p) {
  if (!p.y.is_zero()) throw Error(ErrorCode::PreconditionViolated, "axis set point off the axis: " + p.str());
  if (!set_.insert(p.x).second) return false;
  order_.push_back(p.x);
  return true;
}

std::vector<Point> AxisSet::points() const {
  std::vector<Point> out;
  out.reserve(order_.size());
  for (const Rat& x : order_) out.push_back({x, Rat(0)});
  return out;
}

KTuple::KTuple(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::WrongArity, "empty tuple");
  std::set<Point> seen;
  for (const Point& p : points_) {
    if (!lower(p)) throw Error(ErrorCode::PreconditionViolated, "tuple point not strictly below the axis: " + p.str());
    if (!seen.insert(p).second) throw Error(ErrorCode::PreconditionViolated, "repeated tuple point " + p.str());
  }
}

std::optional<Point> sees_via(const Point& z, const Point& y, const AxisSet& A) {
  if (!upper(z) || !lower(y)) {
    throw Error(ErrorCode::SameSideInput, "need z above and y below the axis: " + z.str() + ", " + y.str());
  }
  Point x = crossing(z, y);
  if (A.contains(x)) return x;
  return std::nullopt;
}

ShutterState shutter_init(std::span<const Point> K, const KTuple& first, StepRecord* record) {
  validate_K(K);
  if (first.size() + 1 != K.size()) throw Error(ErrorCode::WrongArity, "tuple size must be |K| - 1");
  ShutterState s;
  s.k = static_cast<int>(first.size());
  s.K.assign(K.begin(), K.end());
  StepRecord rec;

  for (std::size_t i = 0; i < K.size(); ++i) {
    for (std::size_t j = i + 1; j < K.size(); ++j) {
      const AxisCrossing x = x_axis_crossing(line_through(K[i], K[j]));
      if (x.is_axis) throw Error(ErrorCode::DegenerateK, "K pair spans the x-axis");
      if (!x.point) {
        ++rec.horizontal_pairs;
        continue;
      }
      if (s.B.insert(*x.point)) rec.added_B.push_back(*x.point);
    }
  }
  s.b0_size = s.B.size();

  // Sweep (q, 1) for q = 0, 1, -1, 2, -2, ... until no line through a tuple
  // point and a point of B passes through it.
  for (long j = 0; j < kSweepLimit; ++j) {
    const long q = (j % 2 == 1) ? (j + 1) / 2 : -(j / 2);
    const Point z{Rat(q), Rat(1)};
    const bool clear = std::none_of(first.points().begin(), first.points().end(),
                                    [&](const Point& a) { return s.B.contains(crossing(z, a)); });
    if (!clear) continue;
    rec.chosen_z = z;
    for (const Point& a : first.points()) {
      const Point x = crossing(z, a);
      if (s.A.insert(x)) rec.added_A.push_back(x);
    }
    s.history.push_back({first, z});
    rec = finish(s, first, std::move(rec));
    if (record != nullptr) *record = rec;
    if (!rec.verdicts.all()) violation(s, rec.verdicts);
    return s;
  }
  throw Error(ErrorCode::InvariantViolation, "initial viewer sweep exhausted");
}

ShutterState shutter_step(ShutterState s, const KTuple& tuple, StepRecord* record) {
  if (tuple.size() != static_cast<std::size_t>(s.k)) throw Error(ErrorCode::WrongArity, "tuple size must be k");
  if (s.A.empty()) throw Error(ErrorCode::PreconditionViolated, "step on an uninitialized state");
  ++s.step;
  StepRecord rec;

  // B extension. Lines of the family run through an A point and a K point;
  // two of them can only meet above the axis when both the A points and the
  // K points differ. Only pairs involving an A point past the frontier are new.
  const std::size_t a0 = s.A.size();
  const std::size_t m = s.K.size();
  std::unordered_set<Point> dangerous;
  for (std::size_t b = s.z_frontier; b < a0; ++b) {
    const Point sb = s.A.at(b);
    for (std::size_t a = 0; a < b; ++a) {
      const Point sa = s.A.at(a);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (i == j) continue;
          const auto z = meet_above(sa.x, s.K[i], sb.x, s.K[j]);
          if (!z || !dangerous.insert(*z).second) continue;
          bool blocked = false;
          for (const Point& y : s.K) {
            const Point x = crossing(*z, y);
            if (!s.A.contains(x)) {
              if (s.B.insert(x)) rec.added_B.push_back(x);
              blocked = true;
              break;
            }
          }
          if (!blocked) {
            throw Error(ErrorCode::InvariantViolation, "dangerous point " + z->str() + " already sees K");
          }
        }
      }
    }
  }
  s.z_frontier = a0;
  rec.dangerous_points = dangerous.size();

  // A extension. The viewer sits on the line through the first A point and
  // the first tuple point, so it already sees that tuple point via A.
  const Point x = s.A.at(0);
  const Point& a1 = tuple[0];
  const Point dir = x - a1;
  for (long t = 1; t <= kSweepLimit; ++t) {
    const Point z = x + dir * Rat(t);
    bool clear = true;
    for (std::size_t i = 1; i < tuple.size() && clear; ++i) clear = !s.B.contains(crossing(z, tuple[i]));
    if (!clear) continue;
    rec.chosen_z = z;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
      const Point c = crossing(z, tuple[i]);
      if (s.A.insert(c)) rec.added_A.push_back(c);
    }
    s.history.push_back({tuple, z});
    rec = finish(s, tuple, std::move(rec));
    if (record != nullptr) *record = rec;
    if (!rec.verdicts.all()) violation(s, rec.verdicts);
    return s;
  }
  throw Error(ErrorCode::InvariantViolation, "viewer sweep along the line exhausted");
}

std::optional<Point> exists_common_viewer_of_K(const ShutterState& s) {
  const std::size_t m = s.K.size();
  // No A point may lie on a line through two K points.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Line l = line_through(s.K[i], s.K[j]);
      for (const Point& a : s.A.points()) {
        if (l.contains(a)) {
          throw Error(ErrorCode::PreconditionViolated, "A point " + a.str() + " is collinear with two K points");
        }
      }
    }
  }
  // Each A point serves at most one K point.
  if (s.A.size() < m) return std::nullopt;

  // A viewer sees K[0] via some s0 and K[1] via some s1 != s0, so it is the
  // meeting point of line(K[0], s0) and line(K[1], s1).
  const Point& y0 = s.K[0];
  const Point& y1 = s.K[1];
  const std::vector<Rat>& xs = s.A.abscissae();
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = 0; b < xs.size(); ++b) {
      if (a == b) continue;
      const auto z = meet_above(xs[a], y0, xs[b], y1);
      if (!z) continue;
      bool all = true;
      for (std::size_t i = 2; i < m && all; ++i) all = s.A.contains(crossing(*z, s.K[i]));
      if (all) return z;
    }
  }
  return std::nullopt;
}

InvariantVerdicts check_invariants(const ShutterState& s) {
  InvariantVerdicts v;
  for (const Rat& x : s.A.abscissae()) {
    if (s.B.contains_x(x)) v.disjoint = false;
  }
  const std::size_t bound = static_cast<std::size_t>(s.k) + s.step * static_cast<std::size_t>(s.k - 1);
  v.growth_bound = s.A.size() <= bound;
  for (const HistoryEntry& h : s.history) {
    for (const Point& a : h.tuple.points()) {
      if (!sees_via(h.witness, a, s.A)) v.witnesses_valid = false;
    }
  }
  v.no_common_viewer = v.disjoint && !exists_common_viewer_of_K(s).has_value();
  return v;
}

ShutterRun shutter_run(std::span<const Point> K, std::span<const KTuple> tuples,
                       const std::function<void(const StepRecord&)>& on_record) {
  if (tuples.empty()) throw Error(ErrorCode::EmptyInput, "shutter run needs an initial tuple");
  ShutterRun run;
  StepRecord rec;
  auto emit = [&] {
    if (on_record) on_record(rec);
    run.log.push_back(rec);
  };
  try {
    run.state = shutter_init(K, tuples.front(), &rec);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvariantViolation && !rec.tuple.empty()) emit();
    throw;
  }
  emit();
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    rec = StepRecord{};
    try {
      run.state = shutter_step(std::move(run.state), tuples[i], &rec);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvariantViolation && !rec.tuple.empty()) emit();
      throw;
    }
    emit();
  }
  return run;
}

bool sees_through_T(const Point& x, const Point& y, const AxisSet& A) {
  for (const Point* p : {&x, &y}) {
    if (p->y.is_zero() && !A.contains(*p)) throw Error(ErrorCode::PointNotInT, p->str());
  }
  const int sx = x.y.sign();
  const int sy = y.y.sign();
  if (sx == 0 && sy == 0) return x == y;
  // One endpoint on the axis (in A): the rest of the segment avoids the axis.
  if (sx == 0 || sy == 0) return true;
  if (sx == sy) return true;
  return A.contains(*axis_crossing_between(x, y));
}

namespace {

Point random_lower_point(SplitMix64& rng) {
  const long qx = static_cast<long>(rng.range(1, 4));
  const long qy = static_cast<long>(rng.range(1, 4));
  const long px = static_cast<long>(rng.range(-40 * qx, 40 * qx));
  const long py = static_cast<long>(rng.range(1, 20 * qy));
  return {Rat(px, qx), Rat(-py, qy)};
}

std::vector<Point> distinct_lower_points(std::size_t count, SplitMix64& rng) {
  std::vector<Point> out;
  while (out.size() < count) {
    Point p = random_lower_point(rng);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<Point> seeded_K(int k, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::KTooSmall, "k = " + std::to_string(k));
  SplitMix64 rng(mix_seed(seed, 0x4b));
  return distinct_lower_points(static_cast<std::size_t>(k) + 1, rng);
}

std::vector<KTuple> seeded_tuples(int k, std::size_t count, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::KTooSmall, "k = " + std::to_string(k));
  SplitMix64 rng(mix_seed(seed, 0x54));
  std::vector<KTuple> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(distinct_lower_points(static_cast<std::size_t>(k), rng));
  return out;
}

}  // namespace linkstar
