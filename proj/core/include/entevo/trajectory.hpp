#pragma once

#include <map>
#include <string>
#include <vector>

#include "entevo/state.hpp"

namespace entevo {

// Ordered samples (t_k, n(t_k), C(t_k)) of one entanglement evolution,
// together with the limiting point and model metadata.
struct Trajectory {
  std::vector<double> t;
  std::vector<PolarizationVector> n;
  std::vector<double> C;
  PolarizationVector n_infinity = PolarizationVector::Zero();
  bool has_n_infinity = false;
  std::string model;
  std::map<std::string, double> params;

  std::size_t size() const { return t.size(); }
};

// Uniform grid 0 .. t_max with `count` samples (count >= 2).
std::vector<double> time_grid(double t_max, int count);

}  // namespace entevo
