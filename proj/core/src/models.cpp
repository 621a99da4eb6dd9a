#include "entevo/models.hpp"

#include <cmath>
#include <stdexcept>

namespace entevo {
namespace {

using cd = std::complex<double>;

void check_zj(const ZJParams& p) {
  if (!(p.r > 0.0 && p.r <= 1.0))
    throw std::domain_error("ZJParams: r must be in (0, 1]");
  if (p.Gamma1 < 0.0) throw std::domain_error("ZJParams: Gamma1 must be >= 0");
  if (const auto* rtn = std::get_if<RTNDephasing>(&p.dephasing)) {
    if (!(rtn->g > 0.0) || !(rtn->gamma > 0.0))
      throw std::domain_error("ZJParams: RTN dephasing needs g > 0 and gamma > 0");
  } else {
    if (!(std::get<ExponentialDephasing>(p.dephasing).Gamma2 > 0.0))
      throw std::domain_error("ZJParams: exponential dephasing needs Gamma2 > 0");
  }
}

void check_ye(const YEParams& p) {
  if (!(p.a0 >= 0.0 && p.a0 <= 1.0))
    throw std::domain_error("YEParams: a0 must be in [0, 1]");
  if (!(p.Gamma > 0.0)) throw std::domain_error("YEParams: Gamma must be > 0");
}

Eigen::Matrix4d rotation_channel(double angle) {
  Eigen::Matrix4d r = Eigen::Matrix4d::Identity();
  const double c = std::cos(angle), s = std::sin(angle);
  r(1, 1) = c;  r(1, 2) = s;
  r(2, 1) = -s; r(2, 2) = c;
  return r;
}

const std::array<Eigen::Matrix3cd, 8>& gell_mann() {
  static const std::array<Eigen::Matrix3cd, 8> g = [] {
    std::array<Eigen::Matrix3cd, 8> m;
    for (auto& x : m) x.setZero();
    m[0](0, 1) = 1; m[0](1, 0) = 1;
    m[1](0, 1) = cd(0, -1); m[1](1, 0) = cd(0, 1);
    m[2](0, 0) = 1; m[2](1, 1) = -1;
    m[3](0, 2) = 1; m[3](2, 0) = 1;
    m[4](0, 2) = cd(0, -1); m[4](2, 0) = cd(0, 1);
    m[5](1, 2) = 1; m[5](2, 1) = 1;
    m[6](1, 2) = cd(0, -1); m[6](2, 1) = cd(0, 1);
    const double s3 = 1.0 / std::sqrt(3.0);
    m[7](0, 0) = s3; m[7](1, 1) = s3; m[7](2, 2) = -2.0 * s3;
    return m;
  }();
  return g;
}

// Triplet basis order: e1 = (|01>+|10>)/sqrt2, e2 = |00>, e3 = |11>.
const Eigen::Matrix<cd, 4, 3>& triplet_isometry() {
  static const Eigen::Matrix<cd, 4, 3> v = [] {
    Eigen::Matrix<cd, 4, 3> m = Eigen::Matrix<cd, 4, 3>::Zero();
    const double inv = 1.0 / std::sqrt(2.0);
    m(1, 0) = inv;
    m(2, 0) = inv;
    m(0, 1) = 1.0;
    m(3, 2) = 1.0;
    return m;
  }();
  return v;
}

void check_triplet_physical(const Eigen::Matrix3cd& rho) {
  const double t2 = (rho * rho).trace().real();
  const double t3 = (rho * rho * rho).trace().real();
  const double c2 = (1.0 - t2) / 2.0;
  const double c3 = (1.0 - 3.0 * t2 + 2.0 * t3) / 6.0;  // = det(rho)
  if (c2 < -1e-10 || c3 < -1e-10)
    throw ValidationError("d8: triplet state is not physical (c2 = " +
                          std::to_string(c2) + ", det = " + std::to_string(c3) + ")");
}

}  // namespace

std::vector<double> time_grid(double t_max, int count) {
  if (count < 2) throw std::domain_error("time_grid: need at least 2 samples");
  std::vector<double> t(count);
  for (int i = 0; i < count; ++i) t[i] = t_max * i / (count - 1);
  return t;
}

// --------------------------------------------------------------------- D3 --

double d3_zeta(double t, double g, double gamma) {
  const double scale = std::max(std::abs(g), std::abs(gamma));
  if (scale == 0.0) return 1.0;
  if (std::abs(g - gamma) < 1e-8 * scale)
    return std::exp(-gamma * t) * (1.0 + gamma * t);
  if (g > gamma) {
    const double om = std::sqrt(g * g - gamma * gamma);
    return std::exp(-gamma * t) *
           (std::cos(om * t) + gamma / om * std::sin(om * t));
  }
  // Hyperbolic regime, written with explicit exponentials so large om*t
  // cannot overflow: both exponents are negative since om < gamma.
  const double om = std::sqrt(gamma * gamma - g * g);
  return 0.5 * ((1.0 + gamma / om) * std::exp((om - gamma) * t) +
                (1.0 - gamma / om) * std::exp(-(om + gamma) * t));
}

PolarizationVector d3_embed(double x, double y, double z) {
  PolarizationVector n = PolarizationVector::Zero();
  n(XX - 1) = x;
  n(YY - 1) = -x;
  n(XY - 1) = y;
  n(YX - 1) = y;
  n(IZ - 1) = z;
  n(ZI - 1) = z;
  n(ZZ - 1) = 1.0;
  return n;
}

Trajectory d3_trajectory(const D3Params& p, const std::vector<double>& times) {
  const double r0 = std::sqrt(p.x0 * p.x0 + p.y0 * p.y0 + p.z0 * p.z0);
  if (r0 > 1.0 + 1e-12)
    throw std::domain_error("D3Params: initial Bloch vector must have norm <= 1");
  if (p.gamma < 0.0) throw std::domain_error("D3Params: gamma must be >= 0");

  Trajectory traj;
  traj.model = "d3";
  traj.params = {{"g", p.g}, {"gamma", p.gamma}, {"B0", p.B0},
                 {"x0", p.x0}, {"y0", p.y0}, {"z0", p.z0}};
  traj.t = times;
  traj.n.reserve(times.size());
  traj.C.reserve(times.size());
  for (double t : times) {
    const double zeta = d3_zeta(t, p.g, p.gamma);
    const double c = std::cos(p.B0 * t), s = std::sin(p.B0 * t);
    const double x = zeta * (c * p.x0 + s * p.y0);
    const double y = zeta * (-s * p.x0 + c * p.y0);
    traj.n.push_back(d3_embed(x, y, p.z0));
    traj.C.push_back(std::sqrt(x * x + y * y));
  }
  traj.n_infinity = d3_embed(0.0, 0.0, p.z0);
  traj.has_n_infinity = true;
  return traj;
}

AffineMap d3_map(const D3Params& p, double t) {
  AffineMap map;
  map.t = t;
  if (t == 0.0) return map;
  const double zeta = d3_zeta(t, p.g, p.gamma);
  const double c = std::cos(p.B0 * t), s = std::sin(p.B0 * t);
  map.T.setZero();
  // Bloch block: x is carried by (XX, -YY), y by (XY, YX).
  map.T(XX - 1, XX - 1) = zeta * c;  map.T(XX - 1, XY - 1) = zeta * s;
  map.T(XY - 1, XX - 1) = -zeta * s; map.T(XY - 1, XY - 1) = zeta * c;
  map.T(YY - 1, YY - 1) = zeta * c;  map.T(YY - 1, YX - 1) = -zeta * s;
  map.T(YX - 1, YY - 1) = zeta * s;  map.T(YX - 1, YX - 1) = zeta * c;
  map.T(IZ - 1, IZ - 1) = 1.0;
  map.T(ZI - 1, ZI - 1) = 1.0;
  map.T(ZZ - 1, ZZ - 1) = 1.0;
  return map;
}

MapFamily d3_family(const D3Params& p) {
  MapFamily f;
  f.at = [p](double t) { return d3_map(p, t); };
  f.unital = true;
  f.claims_semigroup = false;
  f.name = "d3";
  return f;
}

SubspaceMeta d3_subspace_meta(const D3Params& p) {
  SubspaceMeta m;
  m.model = Model::D3;
  m.dim_D = 3;
  m.dim_D_cap_S = 1;
  m.n_infinity = d3_embed(0.0, 0.0, p.z0);
  m.location = SLocation::BoundaryS;
  return m;
}

// --------------------------------------------------------------------- D8 --

Eigen::Matrix3cd d8_triplet_density(const TripletVector& m) {
  Eigen::Matrix3cd rho = Eigen::Matrix3cd::Identity() / 3.0;
  const auto& g = gell_mann();
  for (int i = 0; i < 8; ++i) rho += 0.5 * m(i) * g[i];
  return rho;
}

TripletVector d8_from_triplet_density(const Eigen::Matrix3cd& rho3) {
  TripletVector m;
  const auto& g = gell_mann();
  for (int i = 0; i < 8; ++i) m(i) = (rho3 * g[i]).trace().real();
  return m;
}

DensityMatrix d8_embed(const TripletVector& m) {
  const auto& v = triplet_isometry();
  return v * d8_triplet_density(m) * v.adjoint();
}

double d8_concurrence(const TripletVector& m) {
  check_triplet_physical(d8_triplet_density(m));
  const double a = 0.5 * std::sqrt(m(5) * m(5) + m(6) * m(6));
  const double s3 = std::sqrt(3.0);
  double radicand = 2.0 - s3 * (s3 * m(2) + m(7)) +
                    3.0 * m(7) * (s3 * m(2) - m(7));
  if (radicand < 0.0) {
    if (radicand < -1e-10)
      throw ValidationError("d8_concurrence: negative radicand " +
                            std::to_string(radicand));
    radicand = 0.0;
  }
  const double b = std::sqrt(2.0) / 6.0 * std::sqrt(radicand);
  return 2.0 * std::min(a, b);
}

bool d8_separable(const TripletVector& m, double tol) {
  return d8_concurrence(m) <= tol;
}

// --------------------------------------------------------------------- YE --

DensityMatrix ye_initial_density(double a0) {
  DensityMatrix rho = DensityMatrix::Zero();
  rho(0, 0) = a0 / 3.0;
  rho(1, 1) = rho(2, 2) = rho(1, 2) = rho(2, 1) = 1.0 / 3.0;
  rho(3, 3) = (1.0 - a0) / 3.0;
  return rho;
}

PolarizationVector ye_state(const YEParams& p, double t) {
  check_ye(p);
  const double k = std::exp(-p.Gamma * t);
  PolarizationVector n = PolarizationVector::Zero();
  const double iz = -1.0 + (2.0 / 3.0) * (1.0 + p.a0) * k;
  n(IZ - 1) = iz;
  n(ZI - 1) = iz;
  n(XX - 1) = (2.0 / 3.0) * k;
  n(YY - 1) = (2.0 / 3.0) * k;
  n(ZZ - 1) = 1.0 - (4.0 / 3.0) * (1.0 + p.a0) * k + (4.0 / 3.0) * p.a0 * k * k;
  return n;
}

double ye_concurrence(const YEParams& p, double t) {
  check_ye(p);
  const double k = std::exp(-p.Gamma * t);
  const double u = 1.0 - k;
  const double f =
      1.0 - std::sqrt(p.a0 * (1.0 - p.a0 + 2.0 * u + u * u * p.a0));
  return (2.0 / 3.0) * std::max(0.0, k * f);
}

KrausMap ye_kraus(const YEParams& p, double t) {
  check_ye(p);
  const double gam = std::exp(-p.Gamma * t / 2.0);
  const double om = std::sqrt(1.0 - std::exp(-p.Gamma * t));
  Eigen::Matrix2cd f1 = Eigen::Matrix2cd::Zero(), f2 = Eigen::Matrix2cd::Zero();
  f1(0, 0) = gam;
  f1(1, 1) = 1.0;
  f2(1, 0) = om;
  const auto kron = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
  };
  KrausMap map;
  map.ops = {kron(f1, f1), kron(f1, f2), kron(f2, f1), kron(f2, f2)};
  return map;
}

AffineMap ye_map(const YEParams& p, double t) {
  check_ye(p);
  AffineMap map;
  map.t = t;
  if (t == 0.0) return map;
  const double k = std::exp(-p.Gamma * t);
  map.T.setZero();
  map.T(IZ - 1, IZ - 1) = k;
  map.T(XX - 1, XX - 1) = k;
  map.T(YY - 1, YY - 1) = k;
  map.T(ZI - 1, ZI - 1) = k;
  map.T(ZZ - 1, IZ - 1) = k * k - k;
  map.T(ZZ - 1, ZI - 1) = k * k - k;
  map.T(ZZ - 1, ZZ - 1) = k * k;
  map.m(IZ - 1) = k - 1.0;
  map.m(ZI - 1) = k - 1.0;
  map.m(ZZ - 1) = (k - 1.0) * (k - 1.0);
  return map;
}

MapFamily ye_family(const YEParams& p) {
  MapFamily f;
  f.at = [p](double t) { return ye_map(p, t); };
  f.unital = false;
  f.claims_semigroup = true;
  f.name = "ye";
  return f;
}

Trajectory ye_trajectory(const YEParams& p, const std::vector<double>& times) {
  check_ye(p);
  Trajectory traj;
  traj.model = "ye";
  traj.params = {{"Gamma", p.Gamma}, {"a0", p.a0}};
  traj.t = times;
  traj.n.reserve(times.size());
  traj.C.reserve(times.size());
  for (double t : times) {
    traj.n.push_back(ye_state(p, t));
    traj.C.push_back(ye_concurrence(p, t));
  }
  traj.n_infinity = PolarizationVector::Zero();
  traj.n_infinity(IZ - 1) = -1.0;
  traj.n_infinity(ZI - 1) = -1.0;
  traj.n_infinity(ZZ - 1) = 1.0;
  traj.has_n_infinity = true;
  return traj;
}

YeTangent ye_tangent_test(const YEParams& p) {
  check_ye(p);
  YeTangent out;
  out.tangent = Eigen::Vector3d(1.0 + p.a0, 1.0, 4.0 * p.a0 - 2.0);
  out.dot = (6.0 * p.a0 - 2.0) / 3.0;
  if (std::abs(out.dot) <= 1e-12)
    out.predicted = YePrediction::Critical;
  else
    out.predicted =
        out.dot < 0.0 ? YePrediction::CategoryA : YePrediction::CategoryE;
  return out;
}

SubspaceMeta ye_subspace_meta() {
  SubspaceMeta m;
  m.model = Model::YE;
  m.dim_D = 3;
  m.dim_D_cap_S = 3;
  PolarizationVector n = PolarizationVector::Zero();
  n(IZ - 1) = -1.0;
  n(ZI - 1) = -1.0;
  n(ZZ - 1) = 1.0;
  m.n_infinity = n;
  m.location = SLocation::BoundaryS;
  return m;
}

// --------------------------------------------------------------------- ZJ --

double zj_dephasing(const ZJParams& p, double t) {
  if (const auto* rtn = std::get_if<RTNDephasing>(&p.dephasing))
    return d3_zeta(t, rtn->g, rtn->gamma);
  return std::exp(-std::get<ExponentialDephasing>(p.dephasing).Gamma2 * t);
}

double dz_concurrence(double n_xx, double n_xy, double n_zz) {
  const double R = std::sqrt(n_xx * n_xx + n_xy * n_xy);
  return std::max(0.0, R - (1.0 + n_zz) / 2.0);
}

bool dz_positivity(double n_xx, double n_xy, double n_zz, double tol) {
  const double R2 = n_xx * n_xx + n_xy * n_xy;
  const double R = std::sqrt(R2);
  return 2.0 * R2 + n_zz * n_zz <= 3.0 + tol && n_zz <= 1.0 - 2.0 * R2 + tol &&
         n_zz >= -1.0 - tol && 2.0 * R + n_zz <= 1.0 + tol;
}

Trajectory zj_trajectory(const ZJParams& p, const std::vector<double>& times) {
  check_zj(p);
  Trajectory traj;
  traj.model = "zj";
  traj.params = {{"r", p.r}, {"phi", p.phi}, {"B0", p.B0}, {"Gamma1", p.Gamma1},
                 {"family", p.family == WernerFamily::Phi ? 1.0 : 0.0}};
  if (const auto* rtn = std::get_if<RTNDephasing>(&p.dephasing)) {
    traj.params["g"] = rtn->g;
    traj.params["gamma"] = rtn->gamma;
  } else {
    traj.params["Gamma2"] = std::get<ExponentialDephasing>(p.dephasing).Gamma2;
  }

  traj.t = times;
  traj.n.reserve(times.size());
  traj.C.reserve(times.size());
  for (double t : times) {
    const double zeta = zj_dephasing(p, t);
    const double relax = std::exp(-p.Gamma1 * t);
    PolarizationVector n = PolarizationVector::Zero();
    if (p.family == WernerFamily::Psi) {
      const double xx = p.r * zeta * std::cos(p.phi);
      const double xy = -p.r * zeta * std::sin(p.phi);
      n(XX - 1) = xx;
      n(YY - 1) = xx;
      n(XY - 1) = xy;
      n(YX - 1) = -xy;
      n(ZZ - 1) = -p.r * relax;
      traj.C.push_back(dz_concurrence(n(XX - 1), n(XY - 1), n(ZZ - 1)));
    } else {
      const double theta = 2.0 * p.B0 * t - p.phi;
      const double xx = p.r * zeta * std::cos(theta);
      const double xy = -p.r * zeta * std::sin(theta);
      n(XX - 1) = xx;
      n(YY - 1) = -xx;
      n(XY - 1) = xy;
      n(YX - 1) = xy;
      n(ZZ - 1) = p.r * relax;
      // Mirrored subspace: the closed form applies with n_ZZ negated.
      traj.C.push_back(dz_concurrence(xx, xy, -n(ZZ - 1)));
    }
    traj.n.push_back(n);
  }

  traj.n_infinity = PolarizationVector::Zero();
  if (p.Gamma1 == 0.0)
    traj.n_infinity(ZZ - 1) = p.family == WernerFamily::Psi ? -p.r : p.r;
  traj.has_n_infinity = true;
  return traj;
}

AffineMap product_channel(const Eigen::Matrix4d& RA, const Eigen::Matrix4d& RB) {
  AffineMap map;
  map.T.setZero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      const int row = 4 * a + b - 1;
      map.m(row) = RA(a, 0) * RB(b, 0);
      for (int ap = 0; ap < 4; ++ap)
        for (int bp = 0; bp < 4; ++bp) {
          if (ap == 0 && bp == 0) continue;
          map.T(row, 4 * ap + bp - 1) = RA(a, ap) * RB(b, bp);
        }
    }
  return map;
}

AffineMap zj_map(const ZJParams& p, double t) {
  check_zj(p);
  const double zeta = zj_dephasing(p, t);
  const Eigen::Matrix4d ra = rotation_channel(p.B0 * t);
  Eigen::Matrix4d rb = rotation_channel(p.B0 * t);
  rb.block<2, 4>(1, 0) *= zeta;
  rb(3, 3) = std::exp(-p.Gamma1 * t);
  AffineMap map = product_channel(ra, rb);
  map.t = t;
  return map;
}

MapFamily zj_family(const ZJParams& p) {
  MapFamily f;
  f.at = [p](double t) { return zj_map(p, t); };
  f.unital = true;
  f.claims_semigroup = std::holds_alternative<ExponentialDephasing>(p.dephasing);
  f.name = "zj";
  return f;
}

SubspaceMeta zj_subspace_meta(const ZJParams& p) {
  check_zj(p);
  SubspaceMeta m;
  m.model = Model::ZJ;
  m.dim_D = 3;
  m.dim_D_cap_S = 3;
  PolarizationVector n = PolarizationVector::Zero();
  if (p.Gamma1 > 0.0) {
    m.n_infinity = n;
    m.location = SLocation::InteriorS;
  } else {
    n(ZZ - 1) = p.family == WernerFamily::Psi ? -p.r : p.r;
    m.n_infinity = n;
    m.location = p.r >= 1.0 ? SLocation::BoundaryS : SLocation::InteriorS;
  }
  return m;
}

// ------------------------------------------------------------------- meta --

SubspaceMeta subspace_meta(Model model) {
  switch (model) {
    case Model::D3:
      return d3_subspace_meta(D3Params{});
    case Model::D8: {
      SubspaceMeta m;
      m.model = Model::D8;
      m.dim_D = 8;
      m.dim_D_cap_S = 7;
      m.n_infinity = std::nullopt;  // configuration-dependent
      m.location = SLocation::BoundaryS;
      return m;
    }
    case Model::YE:
      return ye_subspace_meta();
    case Model::ZJ: {
      ZJParams p;
      p.Gamma1 = 1.0;  // canonical relaxing configuration
      return zj_subspace_meta(p);
    }
  }
  throw std::domain_error("subspace_meta: unknown model");
}

}  // namespace entevo
