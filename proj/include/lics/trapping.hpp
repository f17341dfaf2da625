#pragma once

#include <functional>
#include <vector>

#include "lics/model.hpp"

namespace lics {

using HamiltonianBuilder = std::function<ComplexMatrix(double delta)>;

struct FanoMinimum {
  double delta;
  double ionization;
};

/// Ionization vs. detuning at a fixed probe time, with located minima.
/// Profiles are snapshots; the probe time travels with the result.
struct FanoProfile {
  double t_probe = 0.0;
  std::vector<double> delta;
  std::vector<double> ionization;
  std::vector<FanoMinimum> minima;
  // (grid index, message) for points whose propagation failed; the
  // corresponding ionization entries are NaN.
  std::vector<std::pair<int, std::string>> failures;
};

struct TrappingResult {
  double delta;
  double residual;  // min_i |Im lambda_i| at the returned detuning
};

// Closed-form trapping detuning of the plain two-level system
// (omega_c = 0): Delta = q (Gamma_g - Gamma_e) / 2 + S_g - S_e.
double trapping_detuning_two_level(const CyclicLicsParams& p);

// Closed-form trapping detuning of the cyclic system. The branch sign
// selects the enantiomer; the L/R assignment is scenario data, not a
// convention baked in here.
double trapping_detuning_cyclic(const CyclicLicsParams& p, int branch_sign);

// Locates the detuning where the spectrum of builder(delta) acquires a
// real eigenvalue, by minimizing min_i |Im lambda_i| over the bracket
// (coarse scan, golden-section, parabolic polish). Throws NotFoundError
// when the bracket holds no interior minimum.
TrappingResult trapping_detuning_numeric(const HamiltonianBuilder& builder,
                                         double delta_lo, double delta_hi,
                                         int coarse_points = 201);

// Ionization profile over a detuning grid at fixed probe time, evolving
// c0 under builder(delta). Grid points are independent and may be
// evaluated on several threads; output ordering is by delta.
FanoProfile fano_scan(const HamiltonianBuilder& builder, double delta_lo,
                      double delta_hi, int n_points, double t_probe,
                      const StateVector& c0, int threads = 1);

}  // namespace lics
