#pragma once

#include "lics/model.hpp"

namespace lics {

/// Gaussian pulse envelope, peak * exp(-((t - center)/width)^2).
struct PulseSpec {
  double peak = 0.0;
  double center = 0.0;
  double width = 1.0;

  double operator()(double t) const;
  void validate() const;
};

/// Three bound states under cyclic excitation: pump (1-2), Stokes (2-3)
/// and a direct 1-3 coupling whose sign flips between enantiomers.
struct ThreeWaveParams {
  PulseSpec pump;
  PulseSpec stokes;
  PulseSpec control;
  double phi_p = 0.0;
  double phi_s = 0.0;
  double delta_2 = 0.0;  // detuning of state 2
  double delta_3 = 0.0;  // detuning of state 3
  int chirality_sign = +1;

  void validate() const;
};

struct EffectiveParams {
  Complex omega_p;
  Complex omega_s;
  double delta_2;
  double delta_3;
};

struct StirapResult {
  StateVector final_state;
  StateVector target;
  double fidelity;
  bool adiabatic_warning;  // set when fidelity < 0.9
};

// Hermitian 3x3 Hamiltonian of the cyclic three-wave system at time t.
ComplexMatrix build_three_wave_hamiltonian(const ThreeWaveParams& p, double t);

// Mixing-angle transformation decoupling one superposition from the pump.
ComplexMatrix m_transform(double theta, double phi_p);

// Effective couplings and detunings of the transformed lambda system.
// Requires Omega = sqrt(Omega_P^2 + Omega_C^2) > 0 at t.
EffectiveParams effective_parameters(const ThreeWaveParams& p, double t);

// Counterintuitive-order transfer into the enantiomer-dependent
// superposition sin(theta) e^{i phi_p} psi_2 - cos(theta) psi_3 with
// theta = sigma * pi/4 (control envelope locked to the pump envelope).
// Integrates the original 3x3 Hamiltonian over [t_start, t_end] from
// psi_1 and reports the fidelity against the target.
StirapResult prepare_superposition(int sigma, const PulseSpec& pump,
                                   const PulseSpec& stokes, double phi_p,
                                   double phi_s, double t_start, double t_end,
                                   double tolerance = 1e-9);

}  // namespace lics
