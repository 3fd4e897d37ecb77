#include "creg/align.hpp"

#include <cmath>

namespace creg {

EdgeAlignment align_edge_pair(const CorrespondenceSet& hr, int i, int j) {
  const Vec3& pi = hr.items[i].p;
  const Vec3& pj = hr.items[j].p;
  const Vec3& qi = hr.items[i].q;
  const Vec3& qj = hr.items[j].q;

  EdgeAlignment out;
  out.i = i;
  out.j = j;
  out.transform.R = rodrigues_align(pj - pi, qj - qi);
  out.transform.t =
      0.5 * ((pi - out.transform.R * qi) + (pj - out.transform.R * qj));
  out.axis_dir = (pj - pi).normalized();
  out.axis_origin = 0.5 * (pi + pj);
  return out;
}

std::vector<std::pair<Vec3, Vec3>> transform_residual_nodes(
    const CorrespondenceSet& hr, const EdgeAlignment& a) {
  std::vector<std::pair<Vec3, Vec3>> out;
  out.reserve(hr.items.size() >= 2 ? hr.items.size() - 2 : 0);
  for (int k = 0; k < hr.size(); ++k) {
    if (k == a.i || k == a.j) continue;
    out.emplace_back(hr.items[k].p, a.transform.apply(hr.items[k].q));
  }
  return out;
}

int loose_degree(const CorrespondenceSet& hr, const EdgeAlignment& a) {
  const Vec3& pi = hr.items[a.i].p;
  const Vec3& qi = hr.items[a.i].q;
  const Vec3 u_p = a.axis_dir;
  const Vec3 u_q = (hr.items[a.j].q - qi).normalized();

  int degree = 0;
  for (int k = 0; k < hr.size(); ++k) {
    if (k == a.i || k == a.j) continue;
    const double prj_p = std::abs((hr.items[k].p - pi).dot(u_p));
    const double prj_q = std::abs((hr.items[k].q - qi).dot(u_q));
    if (std::abs(prj_p - prj_q) - hr.delta < 0.0) ++degree;
  }
  return degree;
}

}  // namespace creg
