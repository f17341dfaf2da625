#include "lics/run.hpp"

#include <algorithm>
#include <cmath>

#include "lics/darkbright.hpp"
#include "lics/errors.hpp"
#include "lics/propagator.hpp"
#include "lics/trapping.hpp"

namespace lics {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) out[i] = lo + i * step;
  return out;
}

CyclicLicsParams branch_params(const Scenario& sc, const Branch& b) {
  CyclicLicsParams p = sc.cyclic;
  p.chirality_sign = b.sign;
  if (b.s_g) p.s_g = *b.s_g;
  if (b.s_e) p.s_e = *b.s_e;
  return p;
}

StateVector branch_initial(const Scenario& sc, const Branch& b) {
  const InitialStateSpec& spec = b.initial ? *b.initial : sc.initial;
  return make_initial_state(spec, sc.dim());
}

std::vector<std::string> state_names(const Scenario& sc) {
  switch (sc.kind) {
    case SystemKind::TwoLevelCyclic:
      return {"g", "e"};
    case SystemKind::ThreeWave:
      return {"psi1", "psi2", "psi3"};
    case SystemKind::Multilevel: {
      std::vector<std::string> names;
      for (int i = 1; i <= sc.multi.n_g; ++i)
        names.push_back("g" + std::to_string(i));
      for (int i = 1; i <= sc.multi.n_e; ++i)
        names.push_back("e" + std::to_string(i));
      return names;
    }
  }
  return {};
}

EvolutionResult evolve_branch(const Scenario& sc, const Branch& b,
                              const std::vector<double>& grid,
                              const RunOptions& opts) {
  const StateVector c0 = branch_initial(sc, b);
  switch (sc.kind) {
    case SystemKind::TwoLevelCyclic:
      return evolve_constant(build_cyclic_hamiltonian(branch_params(sc, b)),
                             c0, grid);
    case SystemKind::Multilevel:
      return evolve_constant(build_multilevel_hamiltonian(sc.multi), c0, grid);
    case SystemKind::ThreeWave: {
      ThreeWaveParams tw;
      tw.pump = sc.stirap.pump;
      tw.stokes = sc.stirap.stokes;
      tw.control = sc.stirap.pump;
      tw.phi_p = sc.stirap.phi_p;
      tw.phi_s = sc.stirap.phi_s;
      tw.chirality_sign = b.sign;
      return evolve_timedep(
          [tw](double t) { return build_three_wave_hamiltonian(tw, t); }, c0,
          grid, opts.tol);
    }
  }
  throw ScenarioError("unknown system kind");
}

}  // namespace

ScanResult run_evolve(const Scenario& sc, const RunOptions& opts) {
  ScanResult out;
  out.scenario_hash = sc.hash;
  const std::vector<double> grid =
      linspace(sc.time.start, sc.time.stop, sc.time.points);
  const std::vector<std::string> names = state_names(sc);

  out.columns.push_back("t");
  for (const Branch& b : sc.branches) {
    for (const auto& n : names) out.columns.push_back("pop_" + n + "_" + b.label);
    out.columns.push_back("I_" + b.label);
  }

  std::vector<EvolutionResult> evos;
  for (const Branch& b : sc.branches)
    evos.push_back(evolve_branch(sc, b, grid, opts));

  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<double> row{grid[k]};
    for (const auto& evo : evos) {
      for (Eigen::Index i = 0; i < evo.states[k].size(); ++i)
        row.push_back(std::norm(evo.states[k][i]));
      row.push_back(clamp01(evo.ionization[k]));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

ScanResult run_fano(const Scenario& sc, const RunOptions& opts) {
  if (!sc.scan) throw ScenarioError("fano run needs a $.scan block");
  if (sc.scan->axis != "delta")
    throw ScenarioError("fano scan axis must be delta");
  if (sc.kind == SystemKind::ThreeWave)
    throw ScenarioError("fano scan applies to the LICS system kinds");

  ScanResult out;
  out.scenario_hash = sc.hash;
  out.columns.push_back("delta");

  std::vector<FanoProfile> profiles;
  for (const Branch& b : sc.branches) {
    HamiltonianBuilder builder;
    if (sc.kind == SystemKind::TwoLevelCyclic) {
      CyclicLicsParams p = branch_params(sc, b);
      builder = [p](double delta) mutable {
        p.delta = delta;
        return build_cyclic_hamiltonian(p);
      };
    } else {
      MultiLicsParams p = sc.multi;
      builder = [p](double delta) mutable {
        p.delta = delta;
        return build_multilevel_hamiltonian(p);
      };
    }
    profiles.push_back(fano_scan(builder, sc.scan->lo, sc.scan->hi,
                                 sc.scan->points, sc.scan->probe_time,
                                 branch_initial(sc, b), opts.threads));
    out.columns.push_back("I_" + b.label);
  }

  for (int k = 0; k < sc.scan->points; ++k) {
    std::vector<double> row{profiles.front().delta[k]};
    for (const auto& prof : profiles) row.push_back(clamp01(prof.ionization[k]));
    out.rows.push_back(std::move(row));
  }

  for (std::size_t bi = 0; bi < sc.branches.size(); ++bi) {
    const auto& minima = profiles[bi].minima;
    if (minima.empty()) continue;
    const auto best = std::min_element(
        minima.begin(), minima.end(),
        [](const FanoMinimum& a, const FanoMinimum& b) {
          return a.ionization < b.ionization;
        });
    const std::string& label = sc.branches[bi].label;
    out.summary.emplace_back("minimum_" + label + "_delta", best->delta);
    out.summary.emplace_back("minimum_" + label + "_ionization",
                             clamp01(best->ionization));
    out.summary.emplace_back("minima_count_" + label,
                             static_cast<double>(minima.size()));
  }
  out.summary.emplace_back("t_probe", sc.scan->probe_time);
  return out;
}

ScanResult run_trap(const Scenario& sc, const RunOptions& /*opts*/) {
  if (sc.kind != SystemKind::TwoLevelCyclic)
    throw ScenarioError("trap run applies to the two-level-cyclic kind");

  ScanResult out;
  out.scenario_hash = sc.hash;
  out.columns = {"sign", "delta_formula", "delta_numeric", "residual"};

  for (const Branch& b : sc.branches) {
    CyclicLicsParams p = branch_params(sc, b);
    // The closed-form branch sign and the Hamiltonian coupling sign are
    // opposite: the eigenvalue-reality point of H built with sign s sits
    // at the formula value for branch -s.
    const double formula = trapping_detuning_cyclic(p, -b.sign);
    double lo = formula - 5.0, hi = formula + 5.0;
    if (sc.scan) {
      lo = sc.scan->lo;
      hi = sc.scan->hi;
    }
    auto builder = [p](double delta) mutable {
      p.delta = delta;
      return build_cyclic_hamiltonian(p);
    };
    const TrappingResult numeric = trapping_detuning_numeric(builder, lo, hi);
    out.rows.push_back({static_cast<double>(b.sign), formula, numeric.delta,
                        numeric.residual});
  }
  std::sort(out.rows.begin(), out.rows.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });

  if (sc.cyclic.gamma_g + sc.cyclic.gamma_e > 0.0)
    out.summary.emplace_back("two_level_delta",
                             trapping_detuning_two_level(sc.cyclic));
  return out;
}

ScanResult run_darkbright(const Scenario& sc, const RunOptions& /*opts*/) {
  if (sc.kind != SystemKind::Multilevel)
    throw ScenarioError("darkbright run applies to the multilevel kind");

  const ComplexMatrix h = build_multilevel_hamiltonian(sc.multi);
  DarkBrightDecomposition dec =
      (sc.multi.n_g == 5 && sc.multi.n_e == 5)
          ? decompose(h, build_composite_rotation_5x5(), 5, 5)
          : generic_decomposition(sc.multi);

  ScanResult out;
  out.scenario_hash = sc.hash;
  out.columns = {"i", "j", "w_re", "w_im", "h_rot_re", "h_rot_im"};
  const ComplexMatrix rotated = dec.w * h * dec.w.adjoint();
  const int n = sc.multi.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.rows.push_back({static_cast<double>(i), static_cast<double>(j),
                          dec.w(i, j).real(), dec.w(i, j).imag(),
                          rotated(i, j).real(), rotated(i, j).imag()});

  const auto [eps_g, eps_e] = dark_level_energies(sc.multi);
  out.summary.emplace_back("n_dark_ground", sc.multi.n_g - 1);
  out.summary.emplace_back("n_dark_excited", sc.multi.n_e - 1);
  out.summary.emplace_back("eps_g", eps_g);
  out.summary.emplace_back("eps_e", eps_e);
  double max_im_dark = 0.0;
  for (Eigen::Index k = 0; k < dec.dark_energies.size(); ++k)
    max_im_dark = std::max(max_im_dark, std::abs(dec.dark_energies[k].imag()));
  out.summary.emplace_back("max_im_dark_energy", max_im_dark);
  const double unitarity =
      (dec.w * dec.w.adjoint() - ComplexMatrix::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  out.summary.emplace_back("unitarity_error", unitarity);
  out.summary.emplace_back("bright_00_re", dec.bright(0, 0).real());
  out.summary.emplace_back("bright_00_im", dec.bright(0, 0).imag());
  out.summary.emplace_back("bright_01_re", dec.bright(0, 1).real());
  out.summary.emplace_back("bright_01_im", dec.bright(0, 1).imag());
  out.summary.emplace_back("bright_11_re", dec.bright(1, 1).real());
  out.summary.emplace_back("bright_11_im", dec.bright(1, 1).imag());
  return out;
}

ScanResult run_stirap(const Scenario& sc, const RunOptions& opts) {
  if (sc.kind != SystemKind::ThreeWave)
    throw ScenarioError("stirap run applies to the three-wave kind");

  ScanResult out;
  out.scenario_hash = sc.hash;
  const std::vector<double> grid = linspace(
      0.0, sc.stirap.t_end - sc.stirap.t_start, std::max(2, sc.time.points));
  const std::vector<std::string> names = state_names(sc);

  out.columns.push_back("t");
  std::vector<StirapResult> finals;
  std::vector<EvolutionResult> evos;
  for (const Branch& b : sc.branches) {
    for (const auto& n : names)
      out.columns.push_back("pop_" + n + "_" + b.label);

    ThreeWaveParams tw;
    tw.pump = sc.stirap.pump;
    tw.stokes = sc.stirap.stokes;
    tw.control = sc.stirap.pump;
    tw.phi_p = sc.stirap.phi_p;
    tw.phi_s = sc.stirap.phi_s;
    tw.chirality_sign = b.sign;
    const double t0 = sc.stirap.t_start;
    StateVector c0 = StateVector::Zero(3);
    c0[0] = 1.0;
    evos.push_back(evolve_timedep(
        [tw, t0](double t) { return build_three_wave_hamiltonian(tw, t0 + t); },
        c0, grid, opts.tol));
    finals.push_back(prepare_superposition(b.sign, sc.stirap.pump,
                                           sc.stirap.stokes, sc.stirap.phi_p,
                                           sc.stirap.phi_s, sc.stirap.t_start,
                                           sc.stirap.t_end, opts.tol));
  }

  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<double> row{sc.stirap.t_start + grid[k]};
    for (const auto& evo : evos)
      for (Eigen::Index i = 0; i < 3; ++i)
        row.push_back(std::norm(evo.states[k][i]));
    out.rows.push_back(std::move(row));
  }

  for (std::size_t bi = 0; bi < sc.branches.size(); ++bi)
    out.summary.emplace_back("fidelity_" + sc.branches[bi].label,
                             finals[bi].fidelity);
  if (finals.size() == 2) {
    const Complex ov = finals[0].final_state.dot(finals[1].final_state);
    out.summary.emplace_back("final_overlap", std::abs(ov));
  }
  return out;
}

}  // namespace lics
