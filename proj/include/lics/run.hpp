#pragma once

#include "lics/output.hpp"
#include "lics/scenario.hpp"

namespace lics {

struct RunOptions {
  int threads = 1;
  double tol = 1e-9;
};

// Time evolution per branch: populations and ionization in one table.
ScanResult run_evolve(const Scenario& sc, const RunOptions& opts = {});

// Ionization vs. detuning per branch at the scan's probe time, with a
// located-minima summary.
ScanResult run_fano(const Scenario& sc, const RunOptions& opts = {});

// Closed-form and numeric trapping detunings per branch.
ScanResult run_trap(const Scenario& sc, const RunOptions& opts = {});

// Rotation matrix, rotated Hamiltonian and dark/bright summary for the
// multilevel system.
ScanResult run_darkbright(const Scenario& sc, const RunOptions& opts = {});

// Superposition preparation per branch: populations over time plus
// final fidelities and the mutual overlap of the branch outputs.
ScanResult run_stirap(const Scenario& sc, const RunOptions& opts = {});

}  // namespace lics
