#pragma once

#include <Eigen/Dense>

#include <array>
#include <vector>

#include "entevo/state.hpp"

namespace entevo {

// A 2D coordinate section of the state space keeps exactly two components
// n_i, n_j nonzero.  Only two shapes occur: a unit disc when the generators
// anticommute and a square when they commute.  The square has its corners on
// the axes, i.e. it is the region |x| + |y| <= 1.
enum class SectionKind { Disc, Square };

struct SectionShape {
  SectionKind kind;
  int i, j;
};

// Disc iff mu_i and mu_j anticommute, Square iff they commute.
// Throws std::domain_error when i == j.
SectionShape section_type(int i, int j);

// All 105 unordered-pair classifications.
class SectionTable {
 public:
  SectionKind kind(int i, int j) const;
  int count(SectionKind k) const;

 private:
  friend SectionTable table1();
  std::array<std::array<SectionKind, 16>, 16> kinds_{};
};

SectionTable table1();

// The full 15-vector with components i, j set to (x, y).
PolarizationVector section_state(int i, int j, double x, double y);

// `samples` boundary points of the section, counterclockwise starting from
// the positive-x axis.  Disc: the unit circle.  Square: the perimeter
// |x| + |y| = 1, emitted by direct parametrization (the corners are
// degenerate points of the quartic boundary polynomial, so no root finding
// happens near them).  Requires samples >= 8.
std::vector<Eigen::Vector2d> section_boundary(int i, int j, int samples);

}  // namespace entevo
