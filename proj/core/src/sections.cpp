#include "entevo/sections.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entevo {

SectionShape section_type(int i, int j) {
  const auto rel = commutation_class(i, j);
  return {rel == PauliPairRelation::Anticommute ? SectionKind::Disc
                                                : SectionKind::Square,
          i, j};
}

SectionKind SectionTable::kind(int i, int j) const {
  if (i == j) throw std::domain_error("SectionTable: diagonal entries are undefined");
  if (i < 1 || i > 15 || j < 1 || j > 15)
    throw std::domain_error("SectionTable: index out of range");
  return kinds_[i][j];
}

int SectionTable::count(SectionKind k) const {
  int c = 0;
  for (int i = 1; i <= 15; ++i)
    for (int j = i + 1; j <= 15; ++j)
      if (kinds_[i][j] == k) ++c;
  return c;
}

SectionTable table1() {
  SectionTable t;
  for (int i = 1; i <= 15; ++i)
    for (int j = 1; j <= 15; ++j)
      if (i != j) t.kinds_[i][j] = section_type(i, j).kind;
  return t;
}

PolarizationVector section_state(int i, int j, double x, double y) {
  if (i == j) throw std::domain_error("section_state: indices must differ");
  PolarizationVector n = PolarizationVector::Zero();
  n(i - 1) = x;
  n(j - 1) = y;
  return n;
}

std::vector<Eigen::Vector2d> section_boundary(int i, int j, int samples) {
  if (samples < 8) throw std::domain_error("section_boundary: samples must be >= 8");
  const SectionShape shape = section_type(i, j);
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(samples);
  if (shape.kind == SectionKind::Disc) {
    for (int k = 0; k < samples; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / samples;
      pts.emplace_back(std::cos(phi), std::sin(phi));
    }
  } else {
    // Perimeter of |x| + |y| = 1, four edges of equal length, CCW from (1,0).
    for (int k = 0; k < samples; ++k) {
      const double s = 4.0 * k / samples;
      const int edge = static_cast<int>(s);
      const double u = s - edge;
      switch (edge) {
        case 0: pts.emplace_back(1.0 - u, u); break;
        case 1: pts.emplace_back(-u, 1.0 - u); break;
        case 2: pts.emplace_back(-(1.0 - u), -u); break;
        default: pts.emplace_back(u, -(1.0 - u)); break;
      }
    }
  }
  return pts;
}

}  // namespace entevo
