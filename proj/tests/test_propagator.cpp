#include <doctest.h>

#include <random>

#include "lics/model.hpp"
#include "lics/propagator.hpp"
#include "lics/stirap.hpp"

using namespace lics;

namespace {

// Independent fixed-step RK4 oracle, deliberately unrelated to the
// implementation's eigendecomposition / adaptive-RK paths.
StateVector rk4_oracle(const ComplexMatrix& h, const StateVector& c0,
                       double t_end, double dt = 1e-4) {
  StateVector c = c0;
  const Complex mi(0.0, -1.0);
  const long steps = std::lround(t_end / dt);
  for (long s = 0; s < steps; ++s) {
    const StateVector k1 = mi * (h * c);
    const StateVector k2 = mi * (h * (c + 0.5 * dt * k1));
    const StateVector k3 = mi * (h * (c + 0.5 * dt * k2));
    const StateVector k4 = mi * (h * (c + dt * k3));
    c += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return c;
}

CyclicLicsParams ref_cyclic_branch(int sign, double delta_s) {
  CyclicLicsParams p;
  p.gamma_g = 0.5;
  p.gamma_e = 2.24;
  p.omega_c = 1.2;
  p.q = 4.0;
  p.s_g = delta_s;
  p.delta = 4.5065;
  p.chirality_sign = sign;
  return p;
}

CyclicLicsParams random_cyclic(std::mt19937& rng) {
  std::uniform_real_distribution<double> rate(0.0, 3.0);
  std::uniform_real_distribution<double> any(-5.0, 5.0);
  CyclicLicsParams p;
  p.gamma_g = rate(rng);
  p.gamma_e = rate(rng);
  p.q = any(rng);
  p.s_g = any(rng);
  p.s_e = any(rng);
  p.delta = any(rng);
  p.omega_c = any(rng);
  p.chirality_sign = rng() % 2 ? +1 : -1;
  return p;
}

MultiLicsParams random_multi(std::mt19937& rng) {
  std::uniform_real_distribution<double> rate(0.0, 3.0);
  std::uniform_real_distribution<double> any(-5.0, 5.0);
  MultiLicsParams p;
  p.gamma_g = rate(rng);
  p.gamma_e = rate(rng);
  p.q_gg = any(rng);
  p.q_ee = any(rng);
  p.q_ge = any(rng);
  p.s_g = any(rng);
  p.s_e = any(rng);
  p.delta = any(rng);
  return p;
}

StateVector random_state(std::mt19937& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector c(dim);
  for (int i = 0; i < dim; ++i) c[i] = Complex(gauss(rng), gauss(rng));
  return c / c.norm();
}

}  // namespace

TEST_CASE("ionization of reference states") {
  StateVector c(2);
  c << Complex(1, 0), Complex(0, 0);
  CHECK(ionization(c) == doctest::Approx(0.0).epsilon(1e-15));
  c << Complex(1.0 / std::sqrt(2.0), 0), Complex(0, 1.0 / std::sqrt(2.0));
  CHECK(ionization(c) == doctest::Approx(0.0).epsilon(1e-15));
  c << Complex(0.6, 0), Complex(0, 0);
  CHECK(ionization(c) == doctest::Approx(0.64));
}

TEST_CASE("zero hamiltonian leaves the state untouched") {
  const ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  StateVector c0(3);
  c0 << Complex(0.6, 0), Complex(0, 0.8), Complex(0, 0);
  const auto res = evolve_constant(h, c0, {0.0, 1.0, 7.5});
  for (const auto& c : res.states) CHECK((c - c0).norm() < 1e-14);
  for (double ion : res.ionization) CHECK(std::abs(ion) < 1e-14);
}

TEST_CASE("real diagonal hamiltonian only rotates phases") {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 1.3;
  h(1, 1) = -0.4;
  StateVector c0(2);
  c0 << Complex(0.6, 0), Complex(0, 0.8);
  const auto res = evolve_constant(h, c0, {0.5, 2.0, 9.0});
  for (const auto& c : res.states) {
    CHECK(std::abs(std::abs(c[0]) - 0.6) < 1e-13);
    CHECK(std::abs(std::abs(c[1]) - 0.8) < 1e-13);
  }
}

TEST_CASE("reference scenario evolution matches the RK4 oracle") {
  const ComplexMatrix h_trapped =
      build_cyclic_hamiltonian(ref_cyclic_branch(+1, 7.0));
  const ComplexMatrix h_other = build_cyclic_hamiltonian(ref_cyclic_branch(-1, 2.0));
  StateVector c0(2);
  c0 << Complex(1, 0), Complex(0, 0);

  const auto trapped = evolve_constant(h_trapped, c0, {5.0});
  const auto other = evolve_constant(h_other, c0, {5.0});

  CHECK((trapped.states[0] - rk4_oracle(h_trapped, c0, 5.0)).cwiseAbs()
            .maxCoeff() < 1e-7);
  CHECK((other.states[0] - rk4_oracle(h_other, c0, 5.0)).cwiseAbs()
            .maxCoeff() < 1e-7);

  // Frozen from the oracle.
  CHECK(trapped.ionization[0] == doctest::Approx(0.18248240858444476).epsilon(1e-9));
  CHECK(other.ionization[0] == doctest::Approx(0.9930224403168201).epsilon(1e-9));
  CHECK(trapped.ionization[0] < other.ionization[0]);
}

TEST_CASE("time-dependent integration agrees with the exponential route") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix h = build_cyclic_hamiltonian(random_cyclic(rng));
    const StateVector c0 = random_state(rng, 2);
    const std::vector<double> grid{0.25, 0.6, 1.0};
    const auto a = evolve_constant(h, c0, grid);
    const auto b = evolve_timedep([&h](double) { return h; }, c0, grid, 1e-10);
    for (std::size_t k = 0; k < grid.size(); ++k)
      CHECK((a.states[k] - b.states[k]).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("hermitian time-dependent hamiltonian conserves the norm") {
  ThreeWaveParams tw;
  tw.pump = {8.0, 3.0, 1.0};
  tw.stokes = {8.0, 2.0, 1.0};
  tw.control = {4.0, 3.0, 1.0};
  tw.phi_p = 0.3;
  tw.phi_s = 1.1;
  StateVector c0(3);
  c0 << Complex(1, 0), Complex(0, 0), Complex(0, 0);
  std::vector<double> grid;
  for (int k = 1; k <= 20; ++k) grid.push_back(0.3 * k);
  const auto res = evolve_timedep(
      [&tw](double t) { return build_three_wave_hamiltonian(tw, t); }, c0,
      grid, 1e-10);
  for (const auto& c : res.states)
    CHECK(std::abs(1.0 - c.squaredNorm()) < 1e-9);
}

TEST_CASE("semigroup property of the constant propagator") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix h = build_cyclic_hamiltonian(random_cyclic(rng));
    const StateVector c0 = random_state(rng, 2);
    const double t1 = 0.7, t2 = 1.9;
    const auto direct = evolve_constant(h, c0, {t2});
    const auto first = evolve_constant(h, c0, {t1});
    const auto second = evolve_constant(h, first.states[0], {t2 - t1});
    CHECK((direct.states[0] - second.states[0]).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("ionization is nondecreasing under model hamiltonians") {
  std::mt19937 rng(99);
  std::vector<double> grid;
  for (int k = 0; k <= 200; ++k) grid.push_back(0.02 * k);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix h = trial % 2 == 0
        ? build_cyclic_hamiltonian(random_cyclic(rng))
        : build_multilevel_hamiltonian(random_multi(rng));
    const StateVector c0 = random_state(rng, static_cast<int>(h.rows()));
    const auto res = evolve_constant(h, c0, grid);
    for (std::size_t k = 1; k < grid.size(); ++k)
      CHECK(res.ionization[k] >= res.ionization[k - 1] - 1e-9);
  }
}

TEST_CASE("propagation input validation") {
  const ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  StateVector c3 = StateVector::Zero(3);
  CHECK_THROWS_AS(evolve_constant(h, c3, {1.0}), std::invalid_argument);

  ComplexMatrix bad = h;
  bad(0, 0) = Complex(std::nan(""), 0.0);
  StateVector c2 = StateVector::Zero(2);
  c2[0] = 1.0;
  CHECK_THROWS_AS(evolve_constant(bad, c2, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(evolve_constant(h, c2, {1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(evolve_constant(h, c2, {-1.0}), std::invalid_argument);
}
