#pragma once

#include "creg/align.hpp"
#include "creg/geom.hpp"
#include "creg/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace creg {

// Feasible rotation range [lo, hi] about the edge axis for one
// correspondence, normalized into [0, 2*pi). wraps marks arcs that cross
// zero; lo == hi with wraps set encodes the full circle.
struct AngleInterval {
  int k = -1;  // correspondence index the interval belongs to
  double lo = 0.0;
  double hi = 0.0;
  bool wraps = false;

  bool full() const { return wraps && lo == hi; }
  bool contains(double theta) const {
    if (full()) return true;
    if (wraps) return theta >= lo || theta <= hi;
    return lo <= theta && theta <= hi;
  }
  static AngleInterval full_circle(int k) { return {k, 0.0, 0.0, true}; }
};

struct StabbingResult {
  double theta_star = 0.0;
  int count = 0;
  std::vector<int> stabbed;  // sorted k of every interval containing theta_star
};

/// Rotation range about the z axis through the origin that brings qz within
/// delta of pz. nullopt when no rotation works.
std::optional<AngleInterval> angle_interval_z(const Vec3& pz, const Vec3& qz,
                                              double delta, int k = -1);

/// Same for an arbitrary unit axis through axis_origin: both points are
/// mapped into the z frame first.
std::optional<AngleInterval> angle_interval(const Vec3& p, const Vec3& q,
                                            const Vec3& axis_dir,
                                            const Vec3& axis_origin,
                                            double delta, int k = -1);

/// Angle contained in the most intervals. theta_star is the midpoint of the
/// maximal covered arc; ties between equal-count arcs go to the smallest arc
/// start angle. Empty input gives count 0 and theta_star 0.
StabbingResult interval_stabbing(const std::vector<AngleInterval>& intervals);

/// Tight reliability of an aligned edge: build the angle interval of every
/// residual node, stab, and return (count, stabbing result). The stabbed set
/// holds reduced-set indices.
std::pair<int, StabbingResult> tight_degree(
    const CorrespondenceSet& hr, const EdgeAlignment& a,
    const std::vector<std::pair<Vec3, Vec3>>& residual_nodes, double delta);

}  // namespace creg
