#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace pce {

using cplx = std::complex<double>;

// Injected three-level atom: excited population p_e and ground amplitudes
// c1, c2 with the dephasing factor xi multiplying the g1-g2 coherence.
// Normalization p_e + |c1|^2 + |c2|^2 = 1; |xi| <= 1.
struct AtomPrep {
  double p_e = 0.0;
  cplx c1{1.0, 0.0};
  cplx c2{0.0, 0.0};
  cplx xi{1.0, 0.0};
  std::string label = "phaseonium";
};

AtomPrep phaseonium(double p_e, cplx c1, cplx c2, cplx xi);

// Boltzmann-weighted populations at temperature T and level spacing nu:
// p_e / |c_k|^2 = exp(-hbar nu / k T), no ground-state coherence (xi = 0).
AtomPrep thermal_atoms(double temperature, double nu);

// Same populations and amplitudes, new dephasing factor.
AtomPrep dephase(const AtomPrep& prep, cplx xi_new);

// 3x3 density matrix in basis order {e, g1, g2}.
Eigen::Matrix3cd density_matrix(const AtomPrep& prep);

// Surviving ground coherence Re(xi c1 c2*).
double coherence_re(const AtomPrep& prep);

// |c1|^2 + |c2|^2 + 2 Re(xi c1 c2*): the absorbing weight seen by the field.
double theta(const AtomPrep& prep);

// Wire format: { "p_e": f, "c1": {"re":f,"im":f}, "c2": {...}, "xi": {...} }.
std::string atom_prep_to_json(const AtomPrep& prep);
AtomPrep atom_prep_from_json(const std::string& text);

}  // namespace pce
