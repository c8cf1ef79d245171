#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "pce/errors.hpp"

namespace pce {

inline constexpr double default_tail_tol = 1e-10;

// Truncated single-mode photon state: Hermitian density matrix with unit
// trace on Fock levels 0..n_max. Immutable after construction; cheap to copy.
class FieldState {
 public:
  // Diagonal state from Fock populations (index = photon number). The list
  // must sum to 1 within 1e-9 and is renormalized exactly.
  static FieldState diagonal(const std::vector<double>& populations);

  // Geometric (thermal) distribution with mean approaching nbar. Throws
  // UnderTruncatedError when the truncated tail exceeds tail_tol.
  static FieldState thermal(int n_max, double nbar, double tail_tol = default_tail_tol);

  // Doubles n_max until the tail check passes, up to n_cap.
  static FieldState thermal_auto(double nbar, double tail_tol = default_tail_tol,
                                 int n_cap = 4096);

  // Validates Hermiticity and unit trace within tol; does not repair input.
  static FieldState from_matrix(Eigen::MatrixXcd rho, double tol = 1e-9);

  // No validation. For solver internals and tests that construct states
  // guaranteed valid by context.
  static FieldState unchecked(Eigen::MatrixXcd rho);

  int n_max() const { return static_cast<int>(rho_.rows()) - 1; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return rho_; }

  double population(int n) const { return rho_(n, n).real(); }
  // Population of the highest retained level; the under-truncation indicator.
  double tail_mass() const { return population(n_max()); }
  bool well_truncated(double tol = default_tail_tol) const { return tail_mass() <= tol; }

  double mean_photon() const;

 private:
  explicit FieldState(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {}
  Eigen::MatrixXcd rho_;
};

FieldState diagonal_state(const std::vector<double>& populations);
FieldState thermal_state(int n_max, double nbar, double tail_tol = default_tail_tol);
double mean_photon(const FieldState& state);

// Throws UnderTruncatedError unless state.tail_mass() <= tol.
void require_well_truncated(const FieldState& state, double tol = default_tail_tol);

// Wire format: { "n_max": int, "re": [[...]], "im": [[...]] }.
// Emission is fixed-format (17 significant digits) and byte-deterministic.
std::string field_state_to_json(const FieldState& state);
FieldState field_state_from_json(const std::string& text);

}  // namespace pce
