#pragma once

#include <Eigen/Dense>

#include <optional>
#include <variant>

#include "entevo/channels.hpp"
#include "entevo/state.hpp"
#include "entevo/trajectory.hpp"

namespace entevo {

enum class Model { D3, D8, YE, ZJ };

// ---------------------------------------------------------------------------
// D3: two exchange-coupled qubits with random-telegraph dephasing on one of
// them.  The {|00>,|11>} block decouples and evolves as an effective Bloch
// vector (x, y, z): x+iy -> zeta_T(t) e^{-i B0 t} (x0+iy0), z constant.
// ---------------------------------------------------------------------------

struct D3Params {
  double g = 0.5;      // coupling to the telegraph noise (rad/time)
  double gamma = 1.0;  // telegraph switching rate (1/time)
  double B0 = 1.0;     // static field (rad/time)
  double x0 = 1.0, y0 = 0.0, z0 = 0.0;  // initial effective Bloch vector
};

// Telegraph-noise dephasing function
//   zeta_T(t) = e^{-gamma t} [cos(Om t) + (gamma/Om) sin(Om t)],
//   Om = sqrt(g^2 - gamma^2);
// trigonometric for g > gamma, hyperbolic for g < gamma, and the analytic
// limit e^{-gamma t}(1 + gamma t) within a relative window 1e-8 of g = gamma.
double d3_zeta(double t, double g, double gamma);

// Embedding of the effective Bloch vector into the 15-dimensional space:
// n_XX = x, n_YY = -x, n_XY = n_YX = y, n_IZ = n_ZI = z, n_ZZ = 1.
PolarizationVector d3_embed(double x, double y, double z);

Trajectory d3_trajectory(const D3Params& params, const std::vector<double>& times);
AffineMap d3_map(const D3Params& params, double t);
MapFamily d3_family(const D3Params& params);

// ---------------------------------------------------------------------------
// D8: geometry of the spin-triplet (3-level) state space in su(3)
// coordinates m_1..m_8, rho = I/3 + (1/2) sum_i m_i G_i with the Gell-Mann
// basis ordered (|01>+|10>)/sqrt2, |00>, |11>.
// ---------------------------------------------------------------------------

using TripletVector = Eigen::Matrix<double, 8, 1>;

// Closed-form concurrence C = 2 min(a, b) with a = |rho_{00,11}| read from
// (m6, m7) and b = sqrt(p00 p11) read from (m3, m8).  The form is exact for
// triplet states whose only off-diagonal support is the |00>-|11> coherence
// and whose symmetric-Bell level is unoccupied; it matches the Wootters
// value of the 4x4 embedding there.  Requires m physical (3x3 positivity);
// a radicand below -1e-10 is rejected.
double d8_concurrence(const TripletVector& m);

// Separable iff m6 = m7 = 0 or the b-radicand vanishes (within tol).
bool d8_separable(const TripletVector& m, double tol = 1e-9);

Eigen::Matrix3cd d8_triplet_density(const TripletVector& m);
TripletVector d8_from_triplet_density(const Eigen::Matrix3cd& rho3);

// 4x4 embedding with zero singlet population.
DensityMatrix d8_embed(const TripletVector& m);

// ---------------------------------------------------------------------------
// YE: independent spontaneous emission on both qubits, one-parameter family
// of initial states rho(0; a0), a0 in [0, 1].
// ---------------------------------------------------------------------------

struct YEParams {
  double Gamma = 1.0;  // emission rate (1/time)
  double a0 = 0.0;     // initial-state parameter in [0, 1]
};

DensityMatrix ye_initial_density(double a0);

// Nonzero components (kappa = e^{-Gamma t}):
//   n_IZ = n_ZI = -1 + (2/3)(1+a0) kappa
//   n_XX = n_YY = (2/3) kappa
//   n_ZZ = 1 - (4/3)(1+a0) kappa + (4/3) a0 kappa^2.
PolarizationVector ye_state(const YEParams& params, double t);

// C(t) = (2/3) max{0, kappa f(t)},
// f = 1 - sqrt(a0 [1 - a0 + 2(1-kappa) + (1-kappa)^2 a0]).
double ye_concurrence(const YEParams& params, double t);

KrausMap ye_kraus(const YEParams& params, double t);

// Affine map on the {n_IZ, n_XX, n_YY, n_ZI, n_ZZ} block.  For t > 0 the
// embedding collapses all unsupported components to zero (they vanish on the
// studied initial family); at t = 0 the map is the identity.
AffineMap ye_map(const YEParams& params, double t);
MapFamily ye_family(const YEParams& params);

Trajectory ye_trajectory(const YEParams& params, const std::vector<double>& times);

enum class YePrediction { CategoryA, CategoryE, Critical };

struct YeTangent {
  Eigen::Vector3d tangent;  // limiting tangent (1+a0, 1, 4a0-2) in (IZ, XX, ZZ)
  double dot;               // against the boundary normal (2,-2,1)/3: (6a0-2)/3
  YePrediction predicted;
};

// Criticality test for the approach direction at the limiting state.  The
// critical point sits at a0 = 1/3 (dot = 0); dot < 0 approaches through
// entangled states (no finite-time death, category A), dot > 0 approaches
// through separable states (finite-time death, category E).
YeTangent ye_tangent_test(const YEParams& params);

// ---------------------------------------------------------------------------
// ZJ: non-interacting qubits, uncorrelated noise, separable dephasing and
// relaxation channels acting on a generalized Werner initial state.
// ---------------------------------------------------------------------------

struct RTNDephasing {
  double g = 0.1;
  double gamma = 0.5;
};
struct ExponentialDephasing {
  double Gamma2 = 1.0;
};
using DephasingModel = std::variant<RTNDephasing, ExponentialDephasing>;

enum class WernerFamily { Phi, Psi };

struct ZJParams {
  double r = 0.5;        // Werner weight in (0, 1]
  double phi = 0.0;      // Bell phase
  double B0 = 0.0;       // static field on both qubits
  double Gamma1 = 0.0;   // longitudinal relaxation rate
  DephasingModel dephasing = RTNDephasing{};
  WernerFamily family = WernerFamily::Psi;
};

double zj_dephasing(const ZJParams& params, double t);

// Psi family: n_XX = n_YY = r zeta cos(phi), n_XY = -n_YX = -r zeta sin(phi),
//             n_ZZ = -r e^{-Gamma1 t} (no precession; the qubit fields cancel).
// Phi family: n_XX = -n_YY = r zeta cos(2 B0 t - phi),
//             n_XY = n_YX = -r zeta sin(2 B0 t - phi),
//             n_ZZ = +r e^{-Gamma1 t}.
// Both give C(t) = max{0, r (|zeta| - xi)}, xi = (1 - r e^{-Gamma1 t}) / 2.
Trajectory zj_trajectory(const ZJParams& params, const std::vector<double>& times);

AffineMap zj_map(const ZJParams& params, double t);
MapFamily zj_family(const ZJParams& params);

// Concurrence on the subspace with n_XX = n_YY, n_XY = -n_YX:
//   C = max{0, R - (1 + n_ZZ)/2},  R = sqrt(n_XX^2 + n_XY^2).
// The Phi Werner family lives in the mirrored subspace (n_YY = -n_XX,
// n_YX = n_XY); there the same form applies with n_ZZ negated.
double dz_concurrence(double n_xx, double n_xy, double n_zz);

// Positivity on the same subspace: 2R^2 + n_ZZ^2 <= 3, n_ZZ <= 1 - 2R^2,
// n_ZZ >= -1 and 2R + n_ZZ <= 1, all within tol.
bool dz_positivity(double n_xx, double n_xy, double n_zz, double tol = 1e-10);

// Extended single-qubit transfer matrices (4x4 acting on (1, x, y, z))
// combined into the two-qubit affine map.
AffineMap product_channel(const Eigen::Matrix4d& RA, const Eigen::Matrix4d& RB);

// ---------------------------------------------------------------------------
// Dynamical-subspace metadata used by the category predictor.
// ---------------------------------------------------------------------------

enum class SLocation { InteriorS, BoundaryS };

struct SubspaceMeta {
  Model model;
  int dim_D = 0;
  int dim_D_cap_S = 0;
  std::optional<PolarizationVector> n_infinity;  // absent: configuration-dependent
  SLocation location = SLocation::BoundaryS;
};

// Canonical metadata per model; D3 and ZJ variants refine the limiting state
// from the parameters.
SubspaceMeta subspace_meta(Model model);
SubspaceMeta d3_subspace_meta(const D3Params& params);
SubspaceMeta zj_subspace_meta(const ZJParams& params);

}  // namespace entevo
