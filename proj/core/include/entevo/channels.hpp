#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

#include "entevo/state.hpp"
#include "entevo/trajectory.hpp"

namespace entevo {

// Affine action n -> T n + m of a channel in polarization coordinates.
struct AffineMap {
  Matrix15d T = Matrix15d::Identity();
  PolarizationVector m = PolarizationVector::Zero();
  double t = 0.0;

  static AffineMap identity(double t = 0.0) {
    AffineMap a;
    a.t = t;
    return a;
  }
};

struct KrausMap {
  std::vector<Eigen::Matrix4cd> ops;

  // max-norm residual of sum_a E_a^dagger E_a - I.
  double completeness_residual() const;
};

// One-parameter family t -> map(t) with T(0) = I, m(0) = 0.
struct MapFamily {
  std::function<AffineMap(double)> at;
  bool unital = false;
  bool claims_semigroup = false;
  std::string name;
};

PolarizationVector affine_apply(const AffineMap& map, const PolarizationVector& n);

// Composite map applying `earlier` first: T = T2 T1, m = T2 m1 + m2.
AffineMap affine_compose(const AffineMap& later, const AffineMap& earlier);

// sum_a E_a rho E_a^dagger.  Throws ValidationError when the completeness
// residual exceeds 1e-10.
DensityMatrix kraus_apply(const KrausMap& map, const DensityMatrix& rho);

struct SemigroupResidual {
  double residual_T = 0.0;  // ||T(t1+t2) - T(t2) T(t1)||_max
  double residual_m = 0.0;  // ||m(t1+t2) - T(t2) m(t1) - m(t2)||_max
};

SemigroupResidual semigroup_residual(const MapFamily& family, double t1, double t2);

// Default grid for semigroup checks: 16x16 pairs, log-spaced on [1e-3, 10].
std::vector<double> semigroup_time_grid();

struct DistanceMarkovianReport {
  bool is_distance_markovian = false;
  double max_violation = 0.0;  // max over k of (d_{k+1} - d_k, 0)
};

// Checks that |n(t_k) - n_infinity| is non-increasing within `slack`.
DistanceMarkovianReport distance_markovian(const Trajectory& trajectory,
                                           double slack = 1e-9);

}  // namespace entevo
