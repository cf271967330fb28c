#pragma once

#include <string>
#include <vector>

namespace lqw {

/// Coin parameters: `degree` non-loop out-edges plus one weighted self-loop.
struct CoinSpec {
  int degree = 1;            // number of non-loop directions, >= 1
  double loop_weight = 0.0;  // self-loop weight l, finite and >= 0
};

/// Throws std::invalid_argument if the spec violates its invariants.
void validate(const CoinSpec& spec);

/// Initial-coin-state parameter: a finite value, "track the loop weight", or
/// the pure-loop limit. Kept symbolic so sweeps over the loop weight resolve
/// the tracking mode exactly.
class AlphaMode {
 public:
  static AlphaMode finite(double value);
  static AlphaMode equal_to_loop();
  static AlphaMode infinite();

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_equal_to_loop() const { return kind_ == Kind::kEqualToLoop; }
  bool is_infinite() const { return kind_ == Kind::kInfinite; }

  /// Finite value; throws std::logic_error for symbolic modes.
  double finite_value() const;

  /// Numeric value given the loop weight; +infinity for the infinite mode.
  double resolve(double loop_weight) const;

  /// Short tag used in CSV column names: "0.5", "l", "inf".
  std::string tag() const;

  friend bool operator==(const AlphaMode& a, const AlphaMode& b);

 private:
  enum class Kind { kFinite, kEqualToLoop, kInfinite };
  AlphaMode(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

/// Parses "inf", "l", or a decimal. Throws std::invalid_argument otherwise.
AlphaMode parse_alpha(const std::string& text);

/// (degree+1) x (degree+1) real symmetric matrix, row-major. Basis order:
/// non-loop directions 0..degree-1 first, the self-loop last.
struct CoinMatrix {
  int dim = 0;
  std::vector<double> entries;

  double operator()(int row, int col) const { return entries[static_cast<size_t>(row) * dim + col]; }
  double& operator()(int row, int col) { return entries[static_cast<size_t>(row) * dim + col]; }
};

/// Normalized real coin-space vector together with the mode that produced it.
struct CoinState {
  std::vector<double> amplitudes;
  AlphaMode mode = AlphaMode::finite(0.0);
};

/// Grover coin 2|s_c><s_c| - I about the weighted uniform coin state
/// s_c = (1,...,1,sqrt(l)) / sqrt(degree + l).
CoinMatrix build_grover_coin(const CoinSpec& spec);

/// Weighted coin state s_alpha = (1,...,1,sqrt(alpha)) / sqrt(degree + alpha);
/// the infinite mode returns the pure loop state exactly.
CoinState build_initial_coin_state(const CoinSpec& spec, const AlphaMode& alpha);

/// Overlap <s_c|s_alpha> in [0, 1]. Uses the closed form
/// (1 + sqrt(l*alpha)) / sqrt((1+l)(1+alpha)) for degree 1 and the dot
/// product otherwise.
double coin_overlap(const CoinSpec& spec, const AlphaMode& alpha);

/// Degree-1 coin written as z*sigma_z + x*sigma_x with
/// z = (1-l)/(1+l) and x = 2*sqrt(l)/(1+l).
struct PauliCoefficients {
  double sigma_z = 0.0;
  double sigma_x = 0.0;
};
PauliCoefficients coin_pauli_decomposition(const CoinSpec& spec);

// ---- coin-space diagnostics ----

/// max |(C^T C - I)_ij|
double max_unitarity_deviation(const CoinMatrix& coin);
/// max |(C^2 - I)_ij|
double max_involution_deviation(const CoinMatrix& coin);
/// max |C_ij - C_ji|
double max_asymmetry(const CoinMatrix& coin);
/// max_i |(C v - v)_i| for the coin eigenstate v = s_c
double max_eigenstate_deviation(const CoinMatrix& coin, const CoinSpec& spec);

}  // namespace lqw
