#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace lics {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Parameters of the cyclic two-level system: two bound states coupled
/// through a common continuum plus a direct coupling omega_c whose sign
/// distinguishes the enantiomers. All rates and frequencies are in units
/// of 1/T, where T is the scenario's reference time.
struct CyclicLicsParams {
  double gamma_g = 0.0;   // ionization rate of the ground state
  double gamma_e = 0.0;   // ionization rate of the excited state
  double q = 0.0;         // Fano parameter
  double s_g = 0.0;       // Stark shift of the ground state
  double s_e = 0.0;       // Stark shift of the excited state
  double delta = 0.0;     // two-photon detuning
  double omega_c = 0.0;   // direct bound-bound coupling
  int chirality_sign = +1;

  double gamma_ge() const { return std::sqrt(gamma_g * gamma_e); }
  double delta_s() const { return s_g - s_e; }
  void validate() const;
};

/// Parameters of the degenerate multilevel system: n_g ground and n_e
/// excited states, identical rates and shifts within each level.
struct MultiLicsParams {
  int n_g = 5;
  int n_e = 5;
  double gamma_g = 0.0;
  double gamma_e = 0.0;
  double q_gg = 0.0;
  double q_ee = 0.0;
  double q_ge = 0.0;
  double s_g = 0.0;
  double s_e = 0.0;
  double delta = 0.0;

  // Cross-coupling rate is tied to the single-state rates by degeneracy.
  double gamma_ge() const { return std::sqrt(gamma_g * gamma_e); }
  int dim() const { return n_g + n_e; }
  void validate() const;
};

// 2x2 effective Hamiltonian of the cyclic system. The anti-Hermitian part
// is -(1/2) times a rank-1 PSD matrix, so ionization is nondecreasing.
ComplexMatrix build_cyclic_hamiltonian(const CyclicLicsParams& p);

// (n_g+n_e)-dimensional effective Hamiltonian of the degenerate
// multilevel system. Complex symmetric, not Hermitian.
ComplexMatrix build_multilevel_hamiltonian(const MultiLicsParams& p);

}  // namespace lics
