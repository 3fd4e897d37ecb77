#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace creg {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Edges shorter than this are treated as degenerate.
inline constexpr double kEdgeLengthEps = 1e-12;
// Threshold on 1 + cos(angle) below which two directions count as antiparallel.
inline constexpr double kAntiparallelEps = 1e-9;

struct RigidTransform {
  Mat3 R = Mat3::Identity();
  Vec3 t = Vec3::Zero();

  Vec3 apply(const Vec3& q) const { return R * q + t; }
};

Mat3 skew(const Vec3& v);

/// Rotation R with R * normalized(b) == normalized(a).
///
/// Built as I + [k]x + [k]x^2 / (1 + c) with k = b_hat x a_hat and
/// c = a_hat . b_hat. Near-antiparallel inputs fall back to a half-turn about
/// the bisector of the two directions (exact for any pair); exactly
/// antiparallel inputs use a half-turn about a deterministic perpendicular.
Mat3 rodrigues_align(const Vec3& a, const Vec3& b);

/// Rotation by theta (radians) about a unit axis through the origin.
Mat3 axis_angle_rotation(const Vec3& axis, double theta);

/// Closed-form least-squares rigid fit: minimizes sum |p_i - (R q_i + t)|^2
/// over pairs (p_i, q_i). Throws DegenerateConfiguration for fewer than 3
/// pairs or a cross-covariance of rank < 2.
RigidTransform procrustes_fit(const std::vector<std::pair<Vec3, Vec3>>& pairs);

/// Angular distance between two rotations, in degrees.
double rotation_error_deg(const Mat3& r_true, const Mat3& r_est);

double translation_error(const Vec3& t_true, const Vec3& t_est);

bool is_rotation(const Mat3& m, double tol = 1e-9);

}  // namespace creg
