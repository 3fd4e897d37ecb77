#include "creg/rotsearch.hpp"

#include <algorithm>
#include <cmath>

namespace creg {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;  // fmod can land exactly on 2*pi after rounding
  return a;
}

}  // namespace

std::optional<AngleInterval> angle_interval_z(const Vec3& pz, const Vec3& qz,
                                              double delta, int k) {
  const double dk = std::abs(qz.z() - pz.z());
  if (dk >= delta) return std::nullopt;
  const double delta_xy = std::sqrt(delta * delta - dk * dk);
  const double r_p = std::hypot(pz.x(), pz.y());
  const double r_q = std::hypot(qz.x(), qz.y());
  if (std::abs(r_p - r_q) > delta_xy) return std::nullopt;
  // Rotation circle entirely inside the ball, or a point on the axis:
  // every angle works.
  if (r_p + r_q <= delta_xy || r_q < kEdgeLengthEps || r_p < kEdgeLengthEps) {
    return AngleInterval::full_circle(k);
  }
  const double arg =
      (r_q * r_q + r_p * r_p - delta_xy * delta_xy) / (2.0 * r_q * r_p);
  const double gamma = std::acos(std::clamp(arg, -1.0, 1.0));
  if (gamma >= M_PI) return AngleInterval::full_circle(k);
  const double omega =
      std::atan2(pz.y(), pz.x()) - std::atan2(qz.y(), qz.x());
  AngleInterval out;
  out.k = k;
  out.lo = wrap_angle(omega - gamma);
  out.hi = wrap_angle(omega + gamma);
  out.wraps = out.lo > out.hi;
  return out;
}

std::optional<AngleInterval> angle_interval(const Vec3& p, const Vec3& q,
                                            const Vec3& axis_dir,
                                            const Vec3& axis_origin,
                                            double delta, int k) {
  const Mat3 r_z = rodrigues_align(Vec3::UnitZ(), axis_dir);
  return angle_interval_z(r_z * (p - axis_origin), r_z * (q - axis_origin),
                          delta, k);
}

StabbingResult interval_stabbing(const std::vector<AngleInterval>& intervals) {
  StabbingResult out;
  if (intervals.empty()) return out;

  int full_count = 0;
  struct Event {
    double x;
    int type;  // 0 start, 1 end
  };
  std::vector<Event> events;
  events.reserve(2 * intervals.size());
  int wrap_count = 0;  // wrapping intervals are active while crossing zero
  for (const auto& iv : intervals) {
    if (iv.full()) {
      ++full_count;
      continue;
    }
    events.push_back({iv.lo, 0});
    events.push_back({iv.hi, 1});
    if (iv.wraps) ++wrap_count;
  }

  if (events.empty()) {
    // Only full circles: any angle; report the midpoint of [0, 2*pi).
    out.theta_star = full_count > 0 ? M_PI : 0.0;
  } else {
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
      if (a.x != b.x) return a.x < b.x;
      return a.type < b.type;  // starts before ends at the same angle
    });

    // Group events by angle; record coverage at each angle (point) and on the
    // open arc that follows it.
    struct Group {
      double x;
      int point_cov;
      int arc_cov;
    };
    std::vector<Group> groups;
    int cur = wrap_count;
    for (std::size_t i = 0; i < events.size();) {
      const double x = events[i].x;
      int starts = 0, ends = 0;
      for (; i < events.size() && events[i].x == x; ++i) {
        (events[i].type == 0 ? starts : ends)++;
      }
      cur += starts;
      const int point_cov = cur;  // closed intervals: ends at x still contain x
      cur -= ends;
      groups.push_back({x, point_cov, cur});
    }

    int best = 0;
    for (const auto& g : groups) best = std::max(best, g.point_cov);

    // Maximal covered arcs: runs of groups at peak coverage, connected while
    // the open arc between them stays at the peak.
    struct Arc {
      double start, end;
      bool begins_at_first, ends_at_last;
    };
    std::vector<Arc> arcs;
    const int g_count = static_cast<int>(groups.size());
    for (int i = 0; i < g_count;) {
      if (groups[i].point_cov != best) {
        ++i;
        continue;
      }
      int j = i;
      while (j + 1 < g_count && groups[j].arc_cov == best &&
             groups[j + 1].point_cov == best) {
        ++j;
      }
      arcs.push_back({groups[i].x, groups[j].x, i == 0, j == g_count - 1});
      i = j + 1;
    }

    // The arc after the last event wraps around to the first; stitch the two
    // boundary runs together when the wrap region is still at peak coverage.
    const bool wrap_at_peak = groups.back().arc_cov == best &&
                              groups.front().point_cov == best &&
                              arcs.front().begins_at_first &&
                              arcs.back().ends_at_last;
    double arc_start, arc_end;
    if (wrap_at_peak && arcs.size() == 1) {
      // Peak coverage everywhere.
      arc_start = 0.0;
      arc_end = kTwoPi;
    } else if (wrap_at_peak) {
      Arc merged{arcs.back().start, arcs.front().end + kTwoPi, false, false};
      arcs.pop_back();
      arcs.erase(arcs.begin());
      arcs.push_back(merged);
      std::sort(arcs.begin(), arcs.end(),
                [](const Arc& a, const Arc& b) { return a.start < b.start; });
      arc_start = arcs.front().start;
      arc_end = arcs.front().end;
    } else {
      arc_start = arcs.front().start;
      arc_end = arcs.front().end;
    }
    out.theta_star = wrap_angle(0.5 * (arc_start + arc_end));
  }

  for (const auto& iv : intervals) {
    if (iv.contains(out.theta_star)) out.stabbed.push_back(iv.k);
  }
  std::sort(out.stabbed.begin(), out.stabbed.end());
  out.stabbed.erase(std::unique(out.stabbed.begin(), out.stabbed.end()),
                    out.stabbed.end());
  out.count = static_cast<int>(out.stabbed.size());
  return out;
}

std::pair<int, StabbingResult> tight_degree(
    const CorrespondenceSet& hr, const EdgeAlignment& a,
    const std::vector<std::pair<Vec3, Vec3>>& residual_nodes, double delta) {
  const Mat3 r_z = rodrigues_align(Vec3::UnitZ(), a.axis_dir);

  std::vector<AngleInterval> intervals;
  intervals.reserve(residual_nodes.size());
  std::size_t r = 0;
  for (int k = 0; k < hr.size(); ++k) {
    if (k == a.i || k == a.j) continue;
    const auto& [p, q_moved] = residual_nodes[r++];
    const Vec3 pz = r_z * (p - a.axis_origin);
    const Vec3 qz = r_z * (q_moved - a.axis_origin);
    if (auto iv = angle_interval_z(pz, qz, delta, k)) {
      intervals.push_back(*iv);
    }
  }
  StabbingResult stab = interval_stabbing(intervals);
  const int degree = stab.count;
  return {degree, std::move(stab)};
}

}  // namespace creg
