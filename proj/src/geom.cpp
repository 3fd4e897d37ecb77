#include "creg/geom.hpp"

#include "creg/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace creg {

namespace {

constexpr double kRadToDeg = 180.0 / M_PI;

// Deterministic unit vector orthogonal to a unit vector: Gram-Schmidt of the
// coordinate axis least aligned with it.
Vec3 any_perpendicular(const Vec3& unit) {
  int axis = 0;
  double best = std::abs(unit.x());
  if (std::abs(unit.y()) < best) {
    axis = 1;
    best = std::abs(unit.y());
  }
  if (std::abs(unit.z()) < best) axis = 2;
  Vec3 e = Vec3::Zero();
  e[axis] = 1.0;
  return (e - e.dot(unit) * unit).normalized();
}

}  // namespace

Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(),  //
      v.z(), 0.0, -v.x(),   //
      -v.y(), v.x(), 0.0;
  return m;
}

Mat3 rodrigues_align(const Vec3& a, const Vec3& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na < kEdgeLengthEps || nb < kEdgeLengthEps) {
    throw DegenerateEdge("rodrigues_align: input vector shorter than 1e-12");
  }
  const Vec3 ah = a / na;
  const Vec3 bh = b / nb;

  const Vec3 m = ah + bh;
  // 1 + cos(angle), computed as |a_hat + b_hat|^2 / 2 which stays accurate
  // near antiparallel where the dot product cancels.
  const double one_plus_c = 0.5 * m.squaredNorm();
  if (one_plus_c <= kAntiparallelEps) {
    // Half-turn about the bisector maps b_hat exactly onto a_hat; at exact
    // antiparallel any perpendicular axis does.
    const double nm = m.norm();
    const Vec3 u = nm > 1e-15 ? Vec3(m / nm) : any_perpendicular(ah);
    return 2.0 * u * u.transpose() - Mat3::Identity();
  }
  const Mat3 k = skew(bh.cross(ah));
  return Mat3::Identity() + k + k * k / one_plus_c;
}

Mat3 axis_angle_rotation(const Vec3& axis, double theta) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("axis_angle_rotation: axis must be a unit vector");
  }
  const Mat3 k = skew(axis);
  return Mat3::Identity() + std::sin(theta) * k + (1.0 - std::cos(theta)) * k * k;
}

RigidTransform procrustes_fit(const std::vector<std::pair<Vec3, Vec3>>& pairs) {
  const int n = static_cast<int>(pairs.size());
  if (n < 3) {
    throw DegenerateConfiguration("procrustes_fit: need at least 3 pairs");
  }
  Vec3 p_bar = Vec3::Zero();
  Vec3 q_bar = Vec3::Zero();
  for (const auto& [p, q] : pairs) {
    p_bar += p;
    q_bar += q;
  }
  p_bar /= n;
  q_bar /= n;

  Mat3 h = Mat3::Zero();
  for (const auto& [p, q] : pairs) {
    h += (q - q_bar) * (p - p_bar).transpose();
  }

  Eigen::JacobiSVD<Mat3> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec3 sv = svd.singularValues();
  if (sv(0) <= 0.0 || sv(1) <= 1e-12 * sv(0)) {
    throw DegenerateConfiguration(
        "procrustes_fit: collinear or coincident points");
  }
  const Mat3 u = svd.matrixU();
  const Mat3 v = svd.matrixV();
  const double d = (v * u.transpose()).determinant() < 0.0 ? -1.0 : 1.0;
  RigidTransform out;
  out.R = v * Eigen::DiagonalMatrix<double, 3>(1.0, 1.0, d) * u.transpose();
  out.t = p_bar - out.R * q_bar;
  return out;
}

double rotation_error_deg(const Mat3& r_true, const Mat3& r_est) {
  const double arg = ((r_true * r_est.transpose()).trace() - 1.0) / 2.0;
  return std::acos(std::clamp(arg, -1.0, 1.0)) * kRadToDeg;
}

double translation_error(const Vec3& t_true, const Vec3& t_est) {
  return (t_true - t_est).norm();
}

bool is_rotation(const Mat3& m, double tol) {
  const Mat3 gram = m.transpose() * m;
  return (gram - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(m.determinant() - 1.0) <= tol;
}

}  // namespace creg
