#include "lics/propagator.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lics/errors.hpp"

namespace lics {

double ionization(const StateVector& c) { return 1.0 - c.squaredNorm(); }

namespace {

void check_grid(const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("time grid is empty");
  double prev = -0.0;
  for (double t : t_grid) {
    if (!std::isfinite(t) || t < 0.0)
      throw std::invalid_argument("time grid must be nonnegative and finite");
    if (t < prev) throw std::invalid_argument("time grid must be ascending");
    prev = t;
  }
}

void check_input(const ComplexMatrix& h, const StateVector& c0) {
  if (h.rows() != h.cols()) throw std::invalid_argument("H must be square");
  if (h.rows() != c0.size())
    throw std::invalid_argument("dimension mismatch between H and c0");
  if (!h.allFinite() || !c0.allFinite())
    throw std::invalid_argument("non-finite entries in H or c0");
}

struct EigPropagator {
  Eigen::VectorXcd eigenvalues;
  ComplexMatrix vectors;
  ComplexMatrix vectors_inv;
  bool usable = false;
};

EigPropagator try_eigendecomposition(const ComplexMatrix& h) {
  EigPropagator out;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) return out;
  out.eigenvalues = es.eigenvalues();
  out.vectors = es.eigenvectors();
  Eigen::JacobiSVD<ComplexMatrix> svd(out.vectors);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0 || smax / smin > 1e8) return out;  // near-defective H
  out.vectors_inv = out.vectors.inverse();
  out.usable = true;
  return out;
}

}  // namespace

ComplexMatrix propagator_matrix(const ComplexMatrix& h, double t) {
  if (h.rows() != h.cols()) throw std::invalid_argument("H must be square");
  if (!h.allFinite()) throw std::invalid_argument("non-finite entries in H");
  const Complex mi(0.0, -1.0);
  EigPropagator eig = try_eigendecomposition(h);
  if (eig.usable) {
    Eigen::VectorXcd phases =
        (mi * t * eig.eigenvalues.array()).exp().matrix();
    return eig.vectors * phases.asDiagonal() * eig.vectors_inv;
  }
  return (mi * t * h).exp();
}

EvolutionResult evolve_constant(const ComplexMatrix& h, const StateVector& c0,
                                const std::vector<double>& t_grid) {
  check_input(h, c0);
  check_grid(t_grid);

  EvolutionResult out;
  out.times = t_grid;
  out.states.reserve(t_grid.size());
  out.ionization.reserve(t_grid.size());

  const Complex mi(0.0, -1.0);
  EigPropagator eig = try_eigendecomposition(h);
  if (eig.usable) {
    const Eigen::VectorXcd y = eig.vectors_inv * c0;
    for (double t : t_grid) {
      Eigen::VectorXcd phases =
          (mi * t * eig.eigenvalues.array()).exp().matrix();
      out.states.push_back(eig.vectors * phases.cwiseProduct(y));
    }
  } else {
    for (double t : t_grid) out.states.push_back((mi * t * h).exp() * c0);
  }
  for (const auto& c : out.states) out.ionization.push_back(ionization(c));
  return out;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                 kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                 kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0,
                 kB4 = 125.0 / 192.0, kB5 = -2187.0 / 6784.0,
                 kB6 = 11.0 / 84.0;
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0,
                 kE4 = 71.0 / 1920.0, kE5 = -17253.0 / 339200.0,
                 kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;
constexpr double kC2 = 1.0 / 5.0, kC3 = 3.0 / 10.0, kC4 = 4.0 / 5.0,
                 kC5 = 8.0 / 9.0;

}  // namespace

EvolutionResult evolve_timedep(
    const std::function<ComplexMatrix(double)>& h_of_t, const StateVector& c0,
    const std::vector<double>& t_grid, double rel_tol) {
  check_grid(t_grid);
  if (rel_tol <= 0.0) throw std::invalid_argument("tolerance must be > 0");
  const double abs_tol = rel_tol * 1e-3;

  auto deriv = [&](double t, const StateVector& c) -> StateVector {
    ComplexMatrix h = h_of_t(t);
    check_input(h, c);
    return Complex(0.0, -1.0) * (h * c);
  };

  EvolutionResult out;
  out.times = t_grid;
  out.states.reserve(t_grid.size());

  double t = 0.0;  // c0 is the state at t = 0
  StateVector c = c0;
  StateVector k1 = deriv(t, c);
  double h = 1e-3;

  for (double t_sample : t_grid) {
    while (t < t_sample) {
      h = std::min(h, t_sample - t);
      if (h < 1e-14 * std::max(1.0, std::abs(t))) {
        std::ostringstream msg;
        msg << "step size underflow at t = " << t;
        throw NumericalError(msg.str());
      }
      StateVector k2 = deriv(t + kC2 * h, c + h * (kA21 * k1));
      StateVector k3 = deriv(t + kC3 * h, c + h * (kA31 * k1 + kA32 * k2));
      StateVector k4 =
          deriv(t + kC4 * h, c + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
      StateVector k5 = deriv(
          t + kC5 * h, c + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
      StateVector k6 =
          deriv(t + h, c + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 +
                                kA65 * k5));
      StateVector c_new =
          c + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
      StateVector k7 = deriv(t + h, c_new);
      StateVector err_vec = h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 +
                                 kE6 * k6 + kE7 * k7);

      double err = 0.0;
      for (Eigen::Index i = 0; i < c.size(); ++i) {
        const double scale =
            abs_tol +
            rel_tol * std::max(std::abs(c[i]), std::abs(c_new[i]));
        err = std::max(err, std::abs(err_vec[i]) / scale);
      }

      if (err <= 1.0) {
        t += h;
        c = std::move(c_new);
        k1 = std::move(k7);  // FSAL
      }
      const double factor =
          std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
      h *= factor;
    }
    out.states.push_back(c);
  }
  for (const auto& state : out.states)
    out.ionization.push_back(ionization(state));
  return out;
}

}  // namespace lics
