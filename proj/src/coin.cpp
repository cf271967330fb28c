#include "lqw/coin.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace lqw {

void validate(const CoinSpec& spec) {
  if (spec.degree < 1) {
    throw std::invalid_argument("coin degree must be >= 1");
  }
  if (!std::isfinite(spec.loop_weight) || spec.loop_weight < 0.0) {
    throw std::invalid_argument("loop weight must be finite and >= 0");
  }
}

AlphaMode AlphaMode::finite(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("finite alpha must be >= 0");
  }
  return AlphaMode(Kind::kFinite, value);
}

AlphaMode AlphaMode::equal_to_loop() { return AlphaMode(Kind::kEqualToLoop, 0.0); }

AlphaMode AlphaMode::infinite() { return AlphaMode(Kind::kInfinite, 0.0); }

double AlphaMode::finite_value() const {
  if (kind_ != Kind::kFinite) {
    throw std::logic_error("alpha mode has no finite value");
  }
  return value_;
}

double AlphaMode::resolve(double loop_weight) const {
  switch (kind_) {
    case Kind::kFinite:
      return value_;
    case Kind::kEqualToLoop:
      return loop_weight;
    case Kind::kInfinite:
      return std::numeric_limits<double>::infinity();
  }
  throw std::logic_error("unreachable");
}

std::string AlphaMode::tag() const {
  switch (kind_) {
    case Kind::kEqualToLoop:
      return "l";
    case Kind::kInfinite:
      return "inf";
    case Kind::kFinite: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%g", value_);
      return buf;
    }
  }
  throw std::logic_error("unreachable");
}

bool operator==(const AlphaMode& a, const AlphaMode& b) {
  return a.kind_ == b.kind_ && (a.kind_ != AlphaMode::Kind::kFinite || a.value_ == b.value_);
}

AlphaMode parse_alpha(const std::string& text) {
  if (text == "inf" || text == "infinity") return AlphaMode::infinite();
  if (text == "l") return AlphaMode::equal_to_loop();
  size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse alpha value '" + text + "'");
  }
  if (pos != text.size()) {
    throw std::invalid_argument("cannot parse alpha value '" + text + "'");
  }
  return AlphaMode::finite(value);
}

namespace {

// s_c = (1,...,1,sqrt(l)) / sqrt(d + l)
std::vector<double> coin_eigenstate(const CoinSpec& spec) {
  std::vector<double> v(static_cast<size_t>(spec.degree) + 1);
  const double norm = std::sqrt(spec.degree + spec.loop_weight);
  for (int i = 0; i < spec.degree; ++i) v[i] = 1.0 / norm;
  v[spec.degree] = std::sqrt(spec.loop_weight) / norm;
  return v;
}

}  // namespace

CoinMatrix build_grover_coin(const CoinSpec& spec) {
  validate(spec);
  const std::vector<double> s = coin_eigenstate(spec);
  const int dim = spec.degree + 1;
  CoinMatrix coin;
  coin.dim = dim;
  coin.entries.assign(static_cast<size_t>(dim) * dim, 0.0);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      coin(r, c) = 2.0 * s[r] * s[c] - (r == c ? 1.0 : 0.0);
    }
  }
  return coin;
}

CoinState build_initial_coin_state(const CoinSpec& spec, const AlphaMode& alpha) {
  validate(spec);
  const int dim = spec.degree + 1;
  CoinState state;
  state.mode = alpha;
  state.amplitudes.assign(static_cast<size_t>(dim), 0.0);
  if (alpha.is_infinite()) {
    state.amplitudes[spec.degree] = 1.0;
    return state;
  }
  const double a = alpha.resolve(spec.loop_weight);
  const double norm = std::sqrt(spec.degree + a);
  for (int i = 0; i < spec.degree; ++i) state.amplitudes[i] = 1.0 / norm;
  state.amplitudes[spec.degree] = std::sqrt(a) / norm;
  return state;
}

double coin_overlap(const CoinSpec& spec, const AlphaMode& alpha) {
  validate(spec);
  const double l = spec.loop_weight;
  if (alpha.is_infinite()) {
    return std::sqrt(l / (spec.degree + l));
  }
  const double a = alpha.resolve(l);
  if (spec.degree == 1) {
    return (1.0 + std::sqrt(l * a)) / std::sqrt((1.0 + l) * (1.0 + a));
  }
  const std::vector<double> sc = coin_eigenstate(spec);
  const CoinState sa = build_initial_coin_state(spec, alpha);
  double dot = 0.0;
  for (size_t i = 0; i < sc.size(); ++i) dot += sc[i] * sa.amplitudes[i];
  return dot;
}

PauliCoefficients coin_pauli_decomposition(const CoinSpec& spec) {
  validate(spec);
  if (spec.degree != 1) {
    throw std::invalid_argument("Pauli decomposition requires degree 1");
  }
  const double l = spec.loop_weight;
  return PauliCoefficients{(1.0 - l) / (l + 1.0), 2.0 * std::sqrt(l) / (l + 1.0)};
}

double max_unitarity_deviation(const CoinMatrix& coin) {
  double worst = 0.0;
  for (int r = 0; r < coin.dim; ++r) {
    for (int c = 0; c < coin.dim; ++c) {
      double dot = 0.0;
      for (int k = 0; k < coin.dim; ++k) dot += coin(k, r) * coin(k, c);
      worst = std::max(worst, std::abs(dot - (r == c ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double max_involution_deviation(const CoinMatrix& coin) {
  double worst = 0.0;
  for (int r = 0; r < coin.dim; ++r) {
    for (int c = 0; c < coin.dim; ++c) {
      double dot = 0.0;
      for (int k = 0; k < coin.dim; ++k) dot += coin(r, k) * coin(k, c);
      worst = std::max(worst, std::abs(dot - (r == c ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double max_asymmetry(const CoinMatrix& coin) {
  double worst = 0.0;
  for (int r = 0; r < coin.dim; ++r) {
    for (int c = r + 1; c < coin.dim; ++c) {
      worst = std::max(worst, std::abs(coin(r, c) - coin(c, r)));
    }
  }
  return worst;
}

double max_eigenstate_deviation(const CoinMatrix& coin, const CoinSpec& spec) {
  const std::vector<double> s = coin_eigenstate(spec);
  double worst = 0.0;
  for (int r = 0; r < coin.dim; ++r) {
    double out = 0.0;
    for (int c = 0; c < coin.dim; ++c) out += coin(r, c) * s[c];
    worst = std::max(worst, std::abs(out - s[r]));
  }
  return worst;
}

}  // namespace lqw
