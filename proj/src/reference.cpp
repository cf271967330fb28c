#include "lqw/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace lqw::reference {

Matrix Matrix::zero(int n) {
  Matrix m;
  m.n = n;
  m.a.assign(static_cast<size_t>(n) * n, {0.0, 0.0});
  return m;
}

Matrix Matrix::identity(int n) {
  Matrix m = zero(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (n != rhs.n) throw std::invalid_argument("matrix size mismatch");
  Matrix out = zero(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const std::complex<double> v = (*this)(r, k);
      if (v == std::complex<double>{0.0, 0.0}) continue;
      for (int c = 0; c < n; ++c) out(r, c) += v * rhs(k, c);
    }
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (n != rhs.n) throw std::invalid_argument("matrix size mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < a.size(); ++i) out.a[i] -= rhs.a[i];
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out = zero(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out(r, c) = std::conj((*this)(c, r));
  }
  return out;
}

std::vector<std::complex<double>> Matrix::apply(const std::vector<std::complex<double>>& v) const {
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector size mismatch");
  std::vector<std::complex<double>> out(v.size(), {0.0, 0.0});
  for (int r = 0; r < n; ++r) {
    std::complex<double> acc{0.0, 0.0};
    for (int c = 0; c < n; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

size_t dir_major_index(int sites, int site, int dir) {
  return static_cast<size_t>(dir) * sites + site;
}

std::vector<std::complex<double>> to_site_major(const std::vector<std::complex<double>>& dir_major,
                                                int coin_dim, int sites) {
  std::vector<std::complex<double>> out(dir_major.size());
  for (int site = 0; site < sites; ++site) {
    for (int dir = 0; dir < coin_dim; ++dir) {
      out[static_cast<size_t>(site) * coin_dim + dir] = dir_major[dir_major_index(sites, site, dir)];
    }
  }
  return out;
}

Matrix dense_walk_operator(const Topology& topology, double loop_weight) {
  validate(topology);
  const int degree = coin_degree(topology);
  const int coin_dim = degree + 1;
  const int sites = site_count(topology);
  const int dim = coin_dim * sites;

  // coin from its definition: 2 s s^T - I with s = (1,..,1,sqrt(l))/sqrt(d+l)
  std::vector<double> s(coin_dim);
  const double norm = std::sqrt(degree + loop_weight);
  for (int i = 0; i < degree; ++i) s[i] = 1.0 / norm;
  s[degree] = std::sqrt(loop_weight) / norm;

  Matrix coin_kron = Matrix::zero(dim);
  for (int r = 0; r < coin_dim; ++r) {
    for (int c = 0; c < coin_dim; ++c) {
      const double entry = 2.0 * s[r] * s[c] - (r == c ? 1.0 : 0.0);
      for (int site = 0; site < sites; ++site) {
        coin_kron(static_cast<int>(dir_major_index(sites, site, r)),
                  static_cast<int>(dir_major_index(sites, site, c))) = entry;
      }
    }
  }

  Matrix shift = Matrix::zero(dim);
  for (int site = 0; site < sites; ++site) {
    for (int dir = 0; dir < coin_dim; ++dir) {
      const auto dest = shift_target(topology, dir, site);
      if (!dest) continue;  // zero column: no outgoing edge
      shift(static_cast<int>(dir_major_index(sites, *dest, dir)),
            static_cast<int>(dir_major_index(sites, site, dir))) = 1.0;
    }
  }
  return shift * coin_kron;
}

Matrix dense_projector(const Topology& topology, const std::vector<int>& sites_to_project) {
  const int coin_dim = coin_degree(topology) + 1;
  const int sites = site_count(topology);
  Matrix proj = Matrix::zero(coin_dim * sites);
  for (int site : sites_to_project) {
    for (int dir = 0; dir < coin_dim; ++dir) {
      const int i = static_cast<int>(dir_major_index(sites, site, dir));
      proj(i, i) = 1.0;
    }
  }
  return proj;
}

namespace {

std::vector<std::complex<double>> dense_initial_vector(const WalkConfig& config) {
  const CoinState coin_state = build_initial_coin_state(config.coin, config.alpha);
  const int sites = site_count(config.topology);
  std::vector<std::complex<double>> psi(static_cast<size_t>(config.coin.degree + 1) * sites,
                                        {0.0, 0.0});
  for (int dir = 0; dir <= config.coin.degree; ++dir) {
    psi[dir_major_index(sites, config.start, dir)] = coin_state.amplitudes[dir];
  }
  return psi;
}

double norm2(const std::vector<std::complex<double>>& v) {
  double total = 0.0;
  for (const auto& x : v) total += std::norm(x);
  return total;
}

}  // namespace

DenseEvolution dense_evolve(const WalkConfig& config) {
  validate(config);
  const Matrix walk_op = dense_walk_operator(config.topology, config.coin.loop_weight);
  std::vector<std::complex<double>> psi = dense_initial_vector(config);

  DenseEvolution out;
  const bool measured = std::holds_alternative<BinaryTree>(config.topology);
  Matrix leaf_proj, leaf_comp;
  std::vector<int> leaves;
  const int sites = site_count(config.topology);
  if (measured) {
    leaves = absorbing_set(config.topology, TargetSpec::kAllLeaves);
    leaf_proj = dense_projector(config.topology, leaves);
    leaf_comp = Matrix::identity(walk_op.n) - leaf_proj;
    out.absorbed_by_site.assign(sites, 0.0);
  }
  for (int t = 0; t < config.steps; ++t) {
    psi = walk_op.apply(psi);
    if (measured) {
      const std::vector<std::complex<double>> captured = leaf_proj.apply(psi);
      out.absorbed_by_time.push_back(norm2(captured));
      for (int site : leaves) {
        double here = 0.0;
        for (int dir = 0; dir < coin_degree(config.topology) + 1; ++dir) {
          here += std::norm(captured[dir_major_index(sites, site, dir)]);
        }
        out.absorbed_by_site[site] += here;
      }
      psi = leaf_comp.apply(psi);
    }
  }
  out.amplitudes = std::move(psi);
  return out;
}

std::vector<double> dense_first_crossing_series(const MeasuredWalk& walk, int t_max) {
  validate(walk);
  WalkConfig config = walk.config;
  config.steps = 0;
  const Matrix walk_op = dense_walk_operator(config.topology, config.coin.loop_weight);
  const Matrix proj = dense_projector(config.topology, walk.absorbing_sites);
  const Matrix comp = Matrix::identity(walk_op.n) - proj;
  const Matrix survive_step = comp * walk_op;  // Q U
  const Matrix detect_step = proj * walk_op;   // P U

  const std::vector<std::complex<double>> psi0 = dense_initial_vector(config);
  Matrix rho0 = Matrix::zero(walk_op.n);
  for (int r = 0; r < walk_op.n; ++r) {
    for (int c = 0; c < walk_op.n; ++c) rho0(r, c) = psi0[r] * std::conj(psi0[c]);
  }

  std::vector<double> series;
  Matrix chain = Matrix::identity(walk_op.n);  // (Q U)^(t-1)
  for (int t = 1; t <= t_max; ++t) {
    const Matrix w = detect_step * chain;  // P U (Q U)^(t-1)
    const Matrix left = w * rho0;
    // p = Tr(left * w^dag)
    double p = 0.0;
    for (int r = 0; r < walk_op.n; ++r) {
      for (int c = 0; c < walk_op.n; ++c) {
        p += std::real(left(r, c) * std::conj(w(r, c)));
      }
    }
    series.push_back(p);
    chain = survive_step * chain;
  }
  return series;
}

}  // namespace lqw::reference
