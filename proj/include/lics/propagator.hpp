#pragma once

#include <functional>
#include <vector>

#include "lics/model.hpp"

namespace lics {

/// Sampled time evolution. Ionization values are the raw 1 - |c|^2,
/// kept unclamped; reporting layers may clamp to [0,1].
struct EvolutionResult {
  std::vector<double> times;
  std::vector<StateVector> states;
  std::vector<double> ionization;
};

// I = 1 - sum_i |c_i|^2.
double ionization(const StateVector& c);

// exp(-i H t) via eigendecomposition; falls back to scaling-and-squaring
// when the eigenvector matrix is ill-conditioned (cond > 1e8).
ComplexMatrix propagator_matrix(const ComplexMatrix& h, double t);

// c(t) = exp(-i H t) c0 at each grid point. The grid must be ascending
// and nonnegative.
EvolutionResult evolve_constant(const ComplexMatrix& h, const StateVector& c0,
                                const std::vector<double>& t_grid);

// Adaptive Dormand-Prince 5(4) integration of i dc/dt = H(t) c, sampled
// exactly at the requested grid points.
EvolutionResult evolve_timedep(
    const std::function<ComplexMatrix(double)>& h_of_t, const StateVector& c0,
    const std::vector<double>& t_grid, double rel_tol = 1e-9);

}  // namespace lics
