#pragma once

#include <utility>

#include "lics/model.hpp"

namespace lics {

/// Result of rotating the multilevel Hamiltonian into dark and bright
/// parts. Row ordering of w: dark rows first, then the two bright rows
/// (uniform superpositions over the ground and excited sectors).
struct DarkBrightDecomposition {
  ComplexMatrix w;              // unitary, (n_g+n_e) x (n_g+n_e)
  ComplexMatrix bright;         // 2x2 bottom-right block of W H W^dag
  Eigen::VectorXcd dark_energies;  // diagonal of the dark block
  int n_g = 0;
  int n_e = 0;

  StateVector bright_ground() const;   // row dim-2 of w, as a ket
  StateVector bright_excited() const;  // row dim-1 of w, as a ket
  StateVector dark_state(int k) const;  // k-th dark row, as a ket
};

// The explicit composite Givens rotation for n_g = n_e = 5 (10x10).
ComplexMatrix build_composite_rotation_5x5();

// Applies W H W^dag and splits off the 2x2 bright block. Throws a
// structural error when off-block leakage exceeds 1e-9 (non-degenerate
// or malformed H) or the dark block is not real diagonal.
DarkBrightDecomposition decompose(const ComplexMatrix& h,
                                  const ComplexMatrix& w, int n_g, int n_e);

// Decomposition for arbitrary (n_g, n_e): bright rows are the uniform
// sector superpositions, dark rows a deterministic orthonormal
// completion per sector (reproducible byte-for-byte).
DarkBrightDecomposition generic_decomposition(const MultiLicsParams& p);

// |<bright_g|c0>|^2 + |<bright_e|c0>|^2.
double bright_population(const DarkBrightDecomposition& d,
                         const StateVector& c0);

// Expected dark-level energies (eps_g, eps_e).
std::pair<double, double> dark_level_energies(const MultiLicsParams& p);

}  // namespace lics
