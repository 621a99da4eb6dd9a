#include "entevo/state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace entevo {
namespace {

using cd = std::complex<double>;

// Y (x) Y in the computational basis: antidiag(-1, 1, 1, -1).
constexpr std::array<double, 4> kFlipSign = {-1.0, 1.0, 1.0, -1.0};

void power_traces(const PolarizationVector& n, double& t2, double& t3, double& t4) {
  // rho^2 = (1/16)[(1+|n|^2) I + sum_k (2 n_k + D_k) mu_k] with
  // D_k = sum_ij d_ijk n_i n_j, so the traces of rho^2, rho^3, rho^4 reduce
  // to contractions with the symmetric structure constants.
  const auto& sc = structure_constants();
  const double n2 = n.squaredNorm();

  PolarizationVector D = PolarizationVector::Zero();
  for (const auto& t : sc.d_triples()) {
    const double ni = n(t.i - 1), nj = n(t.j - 1), nk = n(t.k - 1);
    D(t.k - 1) += 2.0 * t.value * ni * nj;
    D(t.i - 1) += 2.0 * t.value * nj * nk;
    D(t.j - 1) += 2.0 * t.value * ni * nk;
  }

  const double alpha = 1.0 + n2;
  const PolarizationVector c = 2.0 * n + D;
  t2 = alpha / 4.0;
  t3 = (1.0 + 3.0 * n2 + n.dot(D)) / 16.0;
  t4 = (alpha * alpha + c.squaredNorm()) / 64.0;
}

PositivityReport report_from_traces(double t2, double t3, double t4, double tol) {
  PositivityReport r;
  r.tolerance = tol;
  r.tr_rho2 = t2;
  r.tr_rho3 = t3;
  r.tr_rho4 = t4;
  r.a1 = 1.0;
  r.a2 = (1.0 - t2) / 2.0;
  r.a3 = (1.0 - 3.0 * t2 + 2.0 * t3) / 6.0;
  r.a4 = (1.0 - 6.0 * t2 + 8.0 * t3 + 3.0 * t2 * t2 - 6.0 * t4) / 24.0;
  r.physical = std::min({r.a2, r.a3, r.a4}) >= -tol;
  return r;
}

}  // namespace

DensityMatrix to_density(const PolarizationVector& n) {
  DensityMatrix rho = 0.25 * DensityMatrix::Identity();
  for (int i = 1; i <= kGeneratorCount; ++i)
    rho += (0.25 * n(i - 1)) * generator(i);
  return rho;
}

PolarizationVector to_polarization(const DensityMatrix& rho) {
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10)
    throw ValidationError("to_polarization: matrix is not Hermitian (residual " +
                          std::to_string(herm) + ")");
  const cd tr = rho.trace();
  if (std::abs(tr - cd(1.0, 0.0)) > 1e-10)
    throw ValidationError("to_polarization: trace differs from 1");
  PolarizationVector n;
  for (int i = 1; i <= kGeneratorCount; ++i)
    n(i - 1) = (rho * generator(i)).trace().real();
  return n;
}

PositivityReport positivity(const PolarizationVector& n, double tol) {
  double t2, t3, t4;
  power_traces(n, t2, t3, t4);
  return report_from_traces(t2, t3, t4, tol);
}

PositivityReport positivity_of_density(const DensityMatrix& rho, double tol) {
  const DensityMatrix rho2 = rho * rho;
  const double t2 = rho2.trace().real();
  const double t3 = (rho2 * rho).trace().real();
  const double t4 = (rho2 * rho2).trace().real();
  return report_from_traces(t2, t3, t4, tol);
}

DensityMatrix spin_flip(const DensityMatrix& rho) {
  DensityMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out(i, j) = kFlipSign[i] * kFlipSign[j] * std::conj(rho(3 - i, 3 - j));
  return out;
}

ConcurrenceResult concurrence_of_density(const DensityMatrix& rho) {
  // The lambdas are the singular values of G = W^T (Y(x)Y) W where rho =
  // W W^dagger.  This avoids squaring into rho * spin_flip(rho) and keeps the
  // small singular values accurate to machine precision.
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(rho);
  Eigen::Vector4d ev = es.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (ev(i) < 0.0) {
      if (ev(i) < -1e-10)
        throw ValidationError("concurrence: density matrix has eigenvalue " +
                              std::to_string(ev(i)));
      ev(i) = 0.0;
    }
  }
  const DensityMatrix W = es.eigenvectors() * ev.cwiseSqrt().asDiagonal();

  DensityMatrix YYW;  // (Y(x)Y) W
  for (int i = 0; i < 4; ++i)
    YYW.row(i) = kFlipSign[i] * W.row(3 - i);
  const DensityMatrix G = W.transpose() * YYW;

  Eigen::JacobiSVD<DensityMatrix> svd(G);
  ConcurrenceResult res;
  for (int i = 0; i < 4; ++i) res.lambdas[i] = svd.singularValues()(i);
  std::sort(res.lambdas.begin(), res.lambdas.end(), std::greater<double>());
  res.q = res.lambdas[0] - res.lambdas[1] - res.lambdas[2] - res.lambdas[3];
  res.C = std::clamp(res.q, 0.0, 1.0);
  return res;
}

ConcurrenceResult concurrence(const PolarizationVector& n, double tol) {
  PositivityReport rep = positivity(n, tol);
  if (!rep.physical)
    throw ValidationError("concurrence: polarization vector is not physical", rep);
  return concurrence_of_density(to_density(n));
}

SeparabilityClass separability_class(const PolarizationVector& n, double tolC) {
  return concurrence(n).C <= tolC ? SeparabilityClass::Separable
                                  : SeparabilityClass::Entangled;
}

PolarizationVector pure_state(double theta1, double theta2, double theta3,
                              double phi1, double phi2, double phi3) {
  // Amplitudes can be negative for wrapped angles, so build the phases with
  // exp rather than std::polar.
  const auto phase = [](double p) { return std::exp(cd(0.0, p)); };
  Eigen::Vector4cd psi;
  psi(0) = std::cos(theta1);
  psi(1) = std::sin(theta1) * std::sin(theta2) * phase(phi1);
  psi(2) = std::sin(theta1) * std::cos(theta2) * std::cos(theta3) * phase(phi2);
  psi(3) = std::sin(theta1) * std::cos(theta2) * std::sin(theta3) * phase(phi3);
  const DensityMatrix rho = psi * psi.adjoint();
  PolarizationVector n;
  for (int i = 1; i <= kGeneratorCount; ++i)
    n(i - 1) = (rho * generator(i)).trace().real();
  return n;
}

}  // namespace entevo
