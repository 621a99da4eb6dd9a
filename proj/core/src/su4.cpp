#include "entevo/su4.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace entevo {
namespace {

using cd = std::complex<double>;

constexpr std::array<std::string_view, 15> kLabels = {
    "IX", "IY", "IZ", "XI", "XX", "XY", "XZ", "YI",
    "YX", "YY", "YZ", "ZI", "ZX", "ZY", "ZZ"};

Eigen::Matrix2cd pauli(int a) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (a) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 3: m << 1, 0, 0, -1; break;
  }
  return m;
}

std::array<Eigen::Matrix4cd, 15> build_generators() {
  std::array<Eigen::Matrix4cd, 15> gens;
  for (int i = 1; i <= 15; ++i) {
    const int alpha = i / 4;
    const int beta = i % 4;
    Eigen::Matrix4cd m;
    const Eigen::Matrix2cd a = pauli(alpha);
    const Eigen::Matrix2cd b = pauli(beta);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        m.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
    gens[i - 1] = m;
  }
  return gens;
}

const std::array<Eigen::Matrix4cd, 15>& generators() {
  static const std::array<Eigen::Matrix4cd, 15> gens = build_generators();
  return gens;
}

inline int dense_index(int i, int j, int k) {
  return ((i - 1) * 15 + (j - 1)) * 15 + (k - 1);
}

// Reference list of the nonzero structure constants, one entry per
// unordered triple (indices ascending, value at that order).
struct RefEntry { int i, j, k; double v; };

constexpr std::array<RefEntry, 15> kRefD = {{
    {1, 4, 5, 1},   {1, 8, 9, 1},    {1, 12, 13, 1}, {2, 4, 6, 1},
    {2, 8, 10, 1},  {2, 12, 14, 1},  {3, 4, 7, 1},   {3, 8, 11, 1},
    {3, 12, 15, 1}, {5, 10, 15, -1}, {5, 11, 14, 1}, {6, 9, 15, 1},
    {6, 11, 13, -1}, {7, 9, 14, -1}, {7, 10, 13, 1},
}};

constexpr std::array<RefEntry, 20> kRefF = {{
    {1, 2, 3, 1},   {1, 6, 7, 1},   {1, 10, 11, 1}, {1, 14, 15, 1},
    {2, 5, 7, -1},  {2, 9, 11, -1}, {2, 13, 15, -1}, {3, 5, 6, 1},
    {3, 9, 10, 1},  {3, 13, 14, 1}, {4, 8, 12, 1},  {4, 9, 13, 1},
    {4, 10, 14, 1}, {4, 11, 15, 1}, {5, 8, 13, 1},  {5, 9, 12, 1},
    {6, 8, 14, 1},  {6, 10, 12, 1}, {7, 8, 15, 1},  {7, 11, 12, 1},
}};

[[noreturn]] void die(const char* what) {
  std::fprintf(stderr, "entevo: structure-constant self-check failed: %s\n", what);
  std::abort();
}

StructureConstants compute_structure_constants() {
  const auto& mu = generators();
  StructureConstants sc;
  sc.f_table.assign(15 * 15 * 15, 0.0);
  sc.d_table.assign(15 * 15 * 15, 0.0);

  for (int i = 1; i <= 15; ++i) {
    for (int j = 1; j <= 15; ++j) {
      const Eigen::Matrix4cd prod = mu[i - 1] * mu[j - 1];
      const Eigen::Matrix4cd comm = prod - mu[j - 1] * mu[i - 1];
      const Eigen::Matrix4cd anti = prod + mu[j - 1] * mu[i - 1];
      for (int k = 1; k <= 15; ++k) {
        const cd tf = (comm * mu[k - 1]).trace() / cd(0, 8);
        const cd td = (anti * mu[k - 1]).trace() / 8.0;
        const double f = std::abs(tf.real()) < 1e-12 ? 0.0 : tf.real();
        const double d = std::abs(td.real()) < 1e-12 ? 0.0 : td.real();
        if (std::abs(tf.imag()) > 1e-12 || std::abs(td.imag()) > 1e-12)
          die("trace formula produced a complex value");
        sc.f_table[dense_index(i, j, k)] = std::round(f);
        sc.d_table[dense_index(i, j, k)] = std::round(d);
        if (std::abs(f - std::round(f)) > 1e-12 || std::abs(d - std::round(d)) > 1e-12)
          die("entry is not integral");
      }
    }
  }

  for (int i = 1; i <= 15; ++i)
    for (int j = i + 1; j <= 15; ++j)
      for (int k = j + 1; k <= 15; ++k) {
        const double f = sc.f_table[dense_index(i, j, k)];
        const double d = sc.d_table[dense_index(i, j, k)];
        if (f != 0.0) sc.f_triples_.push_back({i, j, k, f});
        if (d != 0.0) sc.d_triples_.push_back({i, j, k, d});
      }

  // Check the computed tables against the reference list, both directions.
  auto match = [](const std::vector<StructureConstants::Triple>& got,
                  const RefEntry* ref, std::size_t n) {
    if (got.size() != n) return false;
    for (std::size_t t = 0; t < n; ++t) {
      const bool found = std::any_of(got.begin(), got.end(), [&](const auto& g) {
        return g.i == ref[t].i && g.j == ref[t].j && g.k == ref[t].k &&
               g.value == ref[t].v;
      });
      if (!found) return false;
    }
    return true;
  };
  if (!match(sc.d_triples_, kRefD.data(), kRefD.size())) die("d table mismatch");
  if (!match(sc.f_triples_, kRefF.data(), kRefF.size())) die("f table mismatch");

  return sc;
}

}  // namespace

std::string_view generator_label(int i) {
  if (i < 1 || i > 15) throw std::domain_error("generator index out of range");
  return kLabels[i - 1];
}

int generator_index(std::string_view label) {
  for (int i = 0; i < 15; ++i)
    if (kLabels[i] == label) return i + 1;
  throw std::domain_error("unknown generator label");
}

const Eigen::Matrix4cd& generator(int i) {
  if (i < 1 || i > 15) throw std::domain_error("generator index out of range");
  return generators()[i - 1];
}

PauliPairRelation commutation_class(int i, int j) {
  if (i < 1 || i > 15 || j < 1 || j > 15)
    throw std::domain_error("generator index out of range");
  if (i == j) throw std::domain_error("commutation_class requires i != j");
  // Pauli factors anticommute iff both are non-identity and distinct; the
  // tensor products anticommute iff exactly one slot does.
  const int ai = i / 4, bi = i % 4;
  const int aj = j / 4, bj = j % 4;
  const bool slot1 = ai != 0 && aj != 0 && ai != aj;
  const bool slot2 = bi != 0 && bj != 0 && bi != bj;
  return (slot1 != slot2) ? PauliPairRelation::Anticommute
                          : PauliPairRelation::Commute;
}

double StructureConstants::f(int i, int j, int k) const {
  if (i < 1 || i > 15 || j < 1 || j > 15 || k < 1 || k > 15)
    throw std::domain_error("structure constant index out of range");
  return f_table[dense_index(i, j, k)];
}

double StructureConstants::d(int i, int j, int k) const {
  if (i < 1 || i > 15 || j < 1 || j > 15 || k < 1 || k > 15)
    throw std::domain_error("structure constant index out of range");
  return d_table[dense_index(i, j, k)];
}

const StructureConstants& structure_constants() {
  static const StructureConstants sc = compute_structure_constants();
  return sc;
}

}  // namespace entevo
