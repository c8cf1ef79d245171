#pragma once

#include <Eigen/Dense>

#include "pce/atoms.hpp"
#include "pce/fock.hpp"

namespace pce {

// Resonant Jaynes-Cummings evolution restricted to the invariant subspace
// V_m, ordered basis {|e,m-1>, |g1,m>, |g2,m>}. phase = lambda*sqrt(m)*tau.
struct BlockUnitary {
  int m;
  double phase;
  Eigen::Matrix3cd matrix;
};

BlockUnitary block_u(int m, double phase);

// Joint unitary on the 3(n_max+1)-dimensional atom (x) field space,
// atom-major index = atom*(n_max+1) + n with atom in {e=0, g1=1, g2=2}.
// V_0 = {|g1,0>, |g2,0>} and the dangling |e, n_max> (whose partner
// |G, n_max+1> is truncated away) act as identity, so the result is
// globally unitary.
Eigen::MatrixXcd full_unitary(int n_max, double lambda_tau);

// One atom transit: M(tau) rho = Tr_A[U (rho (x) prep) U+]. The field is
// embedded with one extra level before evolving, so the returned state has
// n_max+1 levels and the map is exactly trace preserving; callers that need
// a bounded truncation should check tail_mass() on the result.
FieldState super_m(const FieldState& field, const AtomPrep& prep, double lambda_tau);

// Fixed-size variant used by the master equation: same block evolution with
// the top block clamped to identity on |e, n_max>, which keeps the map CPTP
// on the truncated space. Accepts any complex matrix (linear in rho).
Eigen::MatrixXcd apply_injection(const Eigen::MatrixXcd& rho, const AtomPrep& prep,
                                 double lambda_tau);

}  // namespace pce
