#pragma once

#include <complex>
#include <vector>

#include "lqw/evolve.hpp"
#include "lqw/hitting.hpp"

// Dense-matrix reference implementations used as independent oracles by the
// verification suite and the tests. Everything here materializes operators
// explicitly and must stay independent of the matrix-free evolution path.
namespace lqw::reference {

struct Matrix {
  int n = 0;
  std::vector<std::complex<double>> a;  // row-major

  static Matrix zero(int n);
  static Matrix identity(int n);

  std::complex<double>& operator()(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  const std::complex<double>& operator()(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix adjoint() const;
  std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const;
};

/// Basis order is coin-major: index = dir * N + site (literal C (x) I kron).
size_t dir_major_index(int sites, int site, int dir);

/// Converts a coin-major dense vector to the site-major layout used by
/// WalkerState.
std::vector<std::complex<double>> to_site_major(const std::vector<std::complex<double>>& dir_major,
                                                int coin_dim, int sites);

/// Explicit U = S * (C (x) I). Tree leaves have no outgoing non-loop edges,
/// so those columns of S are zero; on the other topologies U is unitary.
Matrix dense_walk_operator(const Topology& topology, double loop_weight);

/// I_coin (x) sum over sites |x><x|
Matrix dense_projector(const Topology& topology, const std::vector<int>& sites);

struct DenseEvolution {
  std::vector<std::complex<double>> amplitudes;  // coin-major
  std::vector<double> absorbed_by_time;
  std::vector<double> absorbed_by_site;
};

/// Repeated dense application of U; on the tree each step is followed by the
/// leaf measurement done with explicit projector matrices.
DenseEvolution dense_evolve(const WalkConfig& config);

/// First-crossing series from the density-operator definition
/// p(t) = Tr(P U (Q U)^(t-1) rho0 [(Q U)^(t-1)]^dag U^dag P), with rho0 the
/// explicit initial density matrix and all factors as dense matrices.
std::vector<double> dense_first_crossing_series(const MeasuredWalk& walk, int t_max);

}  // namespace lqw::reference
