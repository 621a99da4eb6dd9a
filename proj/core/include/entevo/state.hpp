#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "entevo/su4.hpp"

namespace entevo {

// 15 real components Tr(rho mu_i) in the Generator ordering; component for
// generator index g lives at Eigen slot g-1.
using PolarizationVector = Eigen::Matrix<double, 15, 1>;
using DensityMatrix = Eigen::Matrix4cd;
using Matrix15d = Eigen::Matrix<double, 15, 15>;

inline double component(const PolarizationVector& n, int gen) { return n(gen - 1); }
inline double& component(PolarizationVector& n, int gen) { return n(gen - 1); }

inline constexpr double kDefaultPositivityTol = 1e-10;
inline constexpr double kDefaultConcurrenceTol = 1e-9;

// Characteristic-polynomial coefficients a1..a4 of rho together with the
// power traces they are built from.  physical <=> min(a2,a3,a4) >= -tolerance
// (a1 = Tr rho = 1 holds by construction).
struct PositivityReport {
  double a1 = 1.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
  double tr_rho2 = 0.0, tr_rho3 = 0.0, tr_rho4 = 0.0;
  bool physical = false;
  double tolerance = kDefaultPositivityTol;
};

struct ConcurrenceResult {
  double C = 0.0;                        // max(0, q), clamped to [0, 1]
  double q = 0.0;                        // lambda1 - lambda2 - lambda3 - lambda4
  std::array<double, 4> lambdas{};       // sorted descending, all >= 0
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
  ValidationError(const std::string& msg, const PositivityReport& report)
      : std::runtime_error(msg), report_(report) {}
  const std::optional<PositivityReport>& report() const { return report_; }

 private:
  std::optional<PositivityReport> report_;
};

// rho = I/4 + (1/4) sum_i n_i mu_i.  Accepts any 15-vector; physicality is a
// separate query.
DensityMatrix to_density(const PolarizationVector& n);

// n_i = Tr(rho mu_i).  Requires rho Hermitian with unit trace within 1e-10,
// otherwise throws ValidationError.
PolarizationVector to_polarization(const DensityMatrix& rho);

// a_k from the power traces of rho(n).  The traces are evaluated through the
// structure-constant contraction, which agrees with the matrix route to
// machine precision and needs no 4x4 eigensolve.
PositivityReport positivity(const PolarizationVector& n,
                            double tol = kDefaultPositivityTol);
PositivityReport positivity_of_density(const DensityMatrix& rho,
                                       double tol = kDefaultPositivityTol);

// Spin flip (Y (x) Y) conj(rho) (Y (x) Y).
DensityMatrix spin_flip(const DensityMatrix& rho);

// Wootters concurrence of a physical polarization vector.  Unphysical input
// (per `positivity` at tolerance tol) throws ValidationError carrying the
// report.  Eigenvalues of rho in [-1e-10, 0) are clamped to zero; anything
// below that range throws.
ConcurrenceResult concurrence(const PolarizationVector& n,
                              double tol = kDefaultPositivityTol);

// Same computation without the physicality gate; the caller guarantees rho
// is (numerically) a state.
ConcurrenceResult concurrence_of_density(const DensityMatrix& rho);

enum class SeparabilityClass { Separable, Entangled };

SeparabilityClass separability_class(const PolarizationVector& n,
                                     double tolC = kDefaultConcurrenceTol);

// Polarization vector of the pure state
//   |psi> = cos(t1)|00> + e^{i p1} sin(t1) sin(t2)|01>
//         + e^{i p2} sin(t1) cos(t2) cos(t3)|10>
//         + e^{i p3} sin(t1) cos(t2) sin(t3)|11>.
// The result satisfies |n|^2 = 3 to machine precision.
PolarizationVector pure_state(double theta1, double theta2, double theta3,
                              double phi1, double phi2, double phi3);

}  // namespace entevo
