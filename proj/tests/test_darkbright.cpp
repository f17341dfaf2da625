#include <doctest.h>

#include <random>

#include "lics/darkbright.hpp"
#include "lics/errors.hpp"
#include "lics/propagator.hpp"

using namespace lics;

namespace {

MultiLicsParams ref_multi_params(double delta = -6.2) {
  MultiLicsParams p;
  p.n_g = 5;
  p.n_e = 5;
  p.gamma_g = 1.7;
  p.gamma_e = 1.9;
  p.q_gg = 1.2;
  p.q_ee = 2.4;
  p.q_ge = 2.26;
  p.s_g = 19.0;
  p.s_e = 20.0;
  p.delta = delta;
  return p;
}

MultiLicsParams random_multi(std::mt19937& rng, int n_g, int n_e) {
  std::uniform_real_distribution<double> rate(0.1, 3.0);
  std::uniform_real_distribution<double> any(-5.0, 5.0);
  MultiLicsParams p;
  p.n_g = n_g;
  p.n_e = n_e;
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

}  // namespace

TEST_CASE("composite rotation is real, unitary and sector-blocked") {
  const ComplexMatrix w = build_composite_rotation_5x5();
  REQUIRE(w.rows() == 10);
  CHECK(w.imag().cwiseAbs().maxCoeff() == 0.0);
  CHECK((w * w.adjoint() - ComplexMatrix::Identity(10, 10))
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  // Dark ground rows live on the ground sector, dark excited rows on the
  // excited sector; the two bright rows come last and are uniform.
  for (int r = 0; r < 4; ++r)
    CHECK(w.row(r).tail(5).cwiseAbs().maxCoeff() < 1e-15);
  for (int r = 4; r < 8; ++r)
    CHECK(w.row(r).head(5).cwiseAbs().maxCoeff() < 1e-15);
  const double u = 1.0 / std::sqrt(5.0);
  for (int j = 0; j < 5; ++j) {
    CHECK(std::abs(w(8, j) - Complex(u, 0)) < 1e-14);
    CHECK(std::abs(w(8, 5 + j)) < 1e-15);
    CHECK(std::abs(w(9, 5 + j) - Complex(u, 0)) < 1e-14);
    CHECK(std::abs(w(9, j)) < 1e-15);
  }
}

TEST_CASE("decomposition of the reference multilevel hamiltonian") {
  const MultiLicsParams p = ref_multi_params();
  const ComplexMatrix h = build_multilevel_hamiltonian(p);
  const auto dec = decompose(h, build_composite_rotation_5x5(), 5, 5);

  REQUIRE(dec.dark_energies.size() == 8);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(dec.dark_energies[k] - Complex(20.02, 0)) < 1e-12);
    CHECK(std::abs(dec.dark_energies[4 + k] - Complex(16.08, 0)) < 1e-12);
  }

  const double gge = std::sqrt(1.7 * 1.9);
  CHECK(std::abs(dec.bright(0, 0) - Complex(14.92, -4.25)) < 1e-12);
  CHECK(std::abs(dec.bright(1, 1) - Complex(-6.2 + 10.88, -4.75)) < 1e-12);
  CHECK(std::abs(dec.bright(0, 1) - (-2.5 * Complex(2.26, 1.0) * gge)) <
        1e-12);
  CHECK(std::abs(dec.bright(1, 0) - dec.bright(0, 1)) < 1e-12);

  // Transformed H has no dark-bright leakage.
  const ComplexMatrix rot = dec.w * h * dec.w.adjoint();
  CHECK(rot.topRightCorner(8, 2).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(rot.bottomLeftCorner(2, 8).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("composite and generic decompositions share the bright block") {
  const MultiLicsParams p = ref_multi_params();
  const ComplexMatrix h = build_multilevel_hamiltonian(p);
  const auto a = decompose(h, build_composite_rotation_5x5(), 5, 5);
  const auto b = generic_decomposition(p);
  CHECK((a.bright - b.bright).cwiseAbs().maxCoeff() < 1e-12);
  // Dark spectra agree up to ordering; here both group by sector.
  for (int k = 0; k < 8; ++k)
    CHECK(std::abs(a.dark_energies[k] - b.dark_energies[k]) < 1e-12);
}

TEST_CASE("expected dark-level energies") {
  const auto [eg, ee] = dark_level_energies(ref_multi_params());
  CHECK(eg == doctest::Approx(20.02).epsilon(1e-12));
  CHECK(ee == doctest::Approx(16.08).epsilon(1e-12));
}

TEST_CASE("decay-free decomposition is diagonal") {
  MultiLicsParams p = ref_multi_params(2.5);
  p.gamma_g = 0.0;
  p.gamma_e = 0.0;
  const auto dec = generic_decomposition(p);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(dec.dark_energies[k] - Complex(19.0, 0)) < 1e-12);
    CHECK(std::abs(dec.dark_energies[4 + k] - Complex(22.5, 0)) < 1e-12);
  }
  CHECK(std::abs(dec.bright(0, 0) - Complex(19.0, 0)) < 1e-12);
  CHECK(std::abs(dec.bright(1, 1) - Complex(22.5, 0)) < 1e-12);
  CHECK(std::abs(dec.bright(0, 1)) < 1e-14);
}

TEST_CASE("small sector counts") {
  SUBCASE("n_g = n_e = 1 has no dark states") {
    std::mt19937 rng(5);
    const auto dec = generic_decomposition(random_multi(rng, 1, 1));
    CHECK(dec.dark_energies.size() == 0);
    CHECK((dec.w - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
          1e-14);
  }
  SUBCASE("n_g = 2, n_e = 3 gives three dark states") {
    std::mt19937 rng(6);
    const auto dec = generic_decomposition(random_multi(rng, 2, 3));
    REQUIRE(dec.dark_energies.size() == 3);
    for (int k = 0; k < 3; ++k)
      CHECK(std::abs(dec.dark_energies[k].imag()) < 1e-12);
  }
}

TEST_CASE("bright population of reference superpositions") {
  const auto dec = generic_decomposition(ref_multi_params());
  StateVector dark_r = StateVector::Zero(10);
  dark_r[0] = Complex(-1.0 / std::sqrt(2.0), 0);
  dark_r[2] = Complex(1.0 / std::sqrt(2.0), 0);
  StateVector bright_l = StateVector::Zero(10);
  bright_l[0] = Complex(1.0 / std::sqrt(2.0), 0);
  bright_l[2] = Complex(1.0 / std::sqrt(2.0), 0);

  CHECK(bright_population(dec, dark_r) < 1e-14);
  CHECK(bright_population(dec, bright_l) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(bright_population(dec, dec.bright_ground()) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dark superposition is immune to ionization") {
  const ComplexMatrix h = build_multilevel_hamiltonian(ref_multi_params());
  StateVector dark_r = StateVector::Zero(10);
  dark_r[0] = Complex(-1.0 / std::sqrt(2.0), 0);
  dark_r[2] = Complex(1.0 / std::sqrt(2.0), 0);
  const auto res = evolve_constant(h, dark_r, {1.0, 8.0, 50.0, 100.0});
  for (double ion : res.ionization) CHECK(std::abs(ion) < 1e-10);
}

TEST_CASE("bright superposition ionizes exactly its bright share") {
  const ComplexMatrix h = build_multilevel_hamiltonian(ref_multi_params());
  StateVector bright_l = StateVector::Zero(10);
  bright_l[0] = Complex(1.0 / std::sqrt(2.0), 0);
  bright_l[2] = Complex(1.0 / std::sqrt(2.0), 0);
  const auto res = evolve_constant(h, bright_l, {8.0, 200.0});
  // Frozen from the independent oracle.
  CHECK(res.ionization[0] == doctest::Approx(0.3985285515811732).epsilon(1e-9));
  CHECK(std::abs(res.ionization[1] - 0.4) < 1e-3);
}

TEST_CASE("leakage in the rotated frame is reported") {
  ComplexMatrix h = build_multilevel_hamiltonian(ref_multi_params());
  h(0, 0) += 1.0;  // breaks the sector degeneracy
  CHECK_THROWS_AS(decompose(h, build_composite_rotation_5x5(), 5, 5),
                  NumericalError);
}

TEST_CASE("generic decomposition properties over random parameters") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 15; ++trial) {
    const MultiLicsParams p =
        random_multi(rng, 1 + trial % 6, 1 + (trial * 5) % 6);
    const auto dec = generic_decomposition(p);
    const int dim = p.dim();
    CHECK((dec.w * dec.w.adjoint() - ComplexMatrix::Identity(dim, dim))
              .cwiseAbs()
              .maxCoeff() < 1e-13);
    const auto [eg, ee] = dark_level_energies(p);
    for (int k = 0; k < p.n_g - 1; ++k)
      CHECK(std::abs(dec.dark_energies[k] - Complex(eg, 0)) < 1e-12);
    for (int k = 0; k < p.n_e - 1; ++k)
      CHECK(std::abs(dec.dark_energies[p.n_g - 1 + k] - Complex(ee, 0)) <
            1e-12);

    const Complex bg(p.s_g - 0.5 * (p.n_g - 1) * p.q_gg * p.gamma_g,
                     -0.5 * p.n_g * p.gamma_g);
    const Complex be(p.s_e + p.delta - 0.5 * (p.n_e - 1) * p.q_ee * p.gamma_e,
                     -0.5 * p.n_e * p.gamma_e);
    CHECK(std::abs(dec.bright(0, 0) - bg) < 1e-12);
    CHECK(std::abs(dec.bright(1, 1) - be) < 1e-12);
    const Complex boff = -0.5 * std::sqrt(double(p.n_g * p.n_e)) *
                         Complex(p.q_ge, 1.0) *
                         std::sqrt(p.gamma_g * p.gamma_e);
    CHECK(std::abs(dec.bright(0, 1) - boff) < 1e-12);
  }
}
