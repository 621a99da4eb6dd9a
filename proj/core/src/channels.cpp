#include "entevo/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace entevo {

double KrausMap::completeness_residual() const {
  Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
  for (const auto& e : ops) sum += e.adjoint() * e;
  return (sum - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
}

PolarizationVector affine_apply(const AffineMap& map, const PolarizationVector& n) {
  return map.T * n + map.m;
}

AffineMap affine_compose(const AffineMap& later, const AffineMap& earlier) {
  AffineMap out;
  out.T = later.T * earlier.T;
  out.m = later.T * earlier.m + later.m;
  out.t = later.t + earlier.t;
  return out;
}

DensityMatrix kraus_apply(const KrausMap& map, const DensityMatrix& rho) {
  const double residual = map.completeness_residual();
  if (residual > 1e-10)
    throw ValidationError("kraus_apply: completeness residual " +
                          std::to_string(residual));
  DensityMatrix out = DensityMatrix::Zero();
  for (const auto& e : map.ops) out += e * rho * e.adjoint();
  return out;
}

SemigroupResidual semigroup_residual(const MapFamily& family, double t1, double t2) {
  if (t1 < 0.0 || t2 < 0.0)
    throw std::domain_error("semigroup_residual: times must be non-negative");
  const AffineMap a1 = family.at(t1);
  const AffineMap a2 = family.at(t2);
  const AffineMap sum = family.at(t1 + t2);
  SemigroupResidual r;
  r.residual_T = (sum.T - a2.T * a1.T).cwiseAbs().maxCoeff();
  r.residual_m = (sum.m - a2.T * a1.m - a2.m).cwiseAbs().maxCoeff();
  return r;
}

std::vector<double> semigroup_time_grid() {
  std::vector<double> ts(16);
  const double lo = std::log(1e-3), hi = std::log(10.0);
  for (int i = 0; i < 16; ++i) ts[i] = std::exp(lo + (hi - lo) * i / 15.0);
  return ts;
}

DistanceMarkovianReport distance_markovian(const Trajectory& trajectory,
                                           double slack) {
  if (!trajectory.has_n_infinity)
    throw ValidationError("distance_markovian: trajectory carries no n_infinity");
  DistanceMarkovianReport rep;
  double prev = -1.0;
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    const double d = (trajectory.n[k] - trajectory.n_infinity).norm();
    if (k > 0) rep.max_violation = std::max(rep.max_violation, d - prev);
    prev = d;
  }
  rep.max_violation = std::max(rep.max_violation, 0.0);
  rep.is_distance_markovian = rep.max_violation <= slack;
  return rep;
}

}  // namespace entevo
