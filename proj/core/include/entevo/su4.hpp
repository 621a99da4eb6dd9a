#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

namespace entevo {

inline constexpr int kGeneratorCount = 15;

// Composite two-qubit generator index.  The fixed ordering is
//   1..15 = IX IY IZ XI XX XY XZ YI YX YY YZ ZI ZX ZY ZZ,
// i.e. index = 4*alpha + beta with alpha, beta in {I=0, X=1, Y=2, Z=3}
// and the II slot removed.  This ordering is a contract shared by all
// vector components, transfer matrices and file formats.
enum Generator : int {
  IX = 1, IY, IZ, XI, XX, XY, XZ, YI, YX, YY, YZ, ZI, ZX, ZY, ZZ,
};

// "IX" .. "ZZ"; throws std::domain_error for indices outside 1..15.
std::string_view generator_label(int i);

// Inverse of generator_label; throws std::domain_error on unknown labels.
int generator_index(std::string_view label);

// sigma_alpha (x) sigma_beta for the labels of i.  Hermitian, traceless,
// Tr(mu_i mu_j) = 4 delta_ij.
const Eigen::Matrix4cd& generator(int i);

enum class PauliPairRelation { Commute, Anticommute };

// Every distinct pair of generators either commutes or anticommutes.
// Throws std::domain_error when i == j or an index is out of range.
PauliPairRelation commutation_class(int i, int j);

// Structure constants of the product rule
//   mu_i mu_j = delta_ij I + (i f_ijk + d_ijk) mu_k,
// with f totally antisymmetric and d totally symmetric.  In this basis all
// nonzero entries are +-1.  The tables are computed once from the trace
// formulas f_ijk = Tr([mu_i,mu_j] mu_k)/(8i), d_ijk = Tr({mu_i,mu_j} mu_k)/8
// and checked against a hard-coded reference list; any mismatch aborts.
struct StructureConstants {
  struct Triple {
    int i, j, k;    // canonical order i < j < k
    double value;   // entry at the canonical order
  };

  double f(int i, int j, int k) const;
  double d(int i, int j, int k) const;

  const std::vector<Triple>& f_triples() const { return f_triples_; }
  const std::vector<Triple>& d_triples() const { return d_triples_; }

  std::vector<double> f_table;  // dense 15^3, 0-based row-major
  std::vector<double> d_table;

 private:
  friend const StructureConstants& structure_constants();
  std::vector<Triple> f_triples_;
  std::vector<Triple> d_triples_;
};

const StructureConstants& structure_constants();

}  // namespace entevo
