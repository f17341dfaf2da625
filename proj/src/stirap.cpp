#include "lics/stirap.hpp"

#include <cmath>

#include "lics/errors.hpp"
#include "lics/propagator.hpp"

namespace lics {

double PulseSpec::operator()(double t) const {
  const double x = (t - center) / width;
  return peak * std::exp(-x * x);
}

void PulseSpec::validate() const {
  if (!(width > 0.0)) throw std::invalid_argument("pulse width must be > 0");
  if (peak < 0.0) throw std::invalid_argument("pulse peak must be >= 0");
  if (!std::isfinite(peak) || !std::isfinite(center) || !std::isfinite(width))
    throw std::invalid_argument("pulse parameters must be finite");
}

void ThreeWaveParams::validate() const {
  pump.validate();
  stokes.validate();
  control.validate();
  if (chirality_sign != +1 && chirality_sign != -1)
    throw std::invalid_argument("chirality_sign must be +1 or -1");
  if (!std::isfinite(phi_p) || !std::isfinite(phi_s) ||
      !std::isfinite(delta_2) || !std::isfinite(delta_3))
    throw std::invalid_argument("three-wave parameters must be finite");
}

ComplexMatrix build_three_wave_hamiltonian(const ThreeWaveParams& p,
                                           double t) {
  const Complex i(0.0, 1.0);
  const double op = p.pump(t);
  const double os = p.stokes(t);
  const double oc = p.chirality_sign * p.control(t);
  ComplexMatrix h(3, 3);
  h(0, 0) = 0.0;
  h(0, 1) = op * std::exp(i * p.phi_p);
  h(0, 2) = oc;
  h(1, 0) = op * std::exp(-i * p.phi_p);
  h(1, 1) = 2.0 * p.delta_2;
  h(1, 2) = os * std::exp(i * p.phi_s);
  h(2, 0) = oc;
  h(2, 1) = os * std::exp(-i * p.phi_s);
  h(2, 2) = 2.0 * p.delta_3;
  return 0.5 * h;
}

ComplexMatrix m_transform(double theta, double phi_p) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = std::cos(theta);
  m(1, 2) = std::exp(-i * phi_p) * std::sin(theta);
  m(2, 1) = std::exp(i * phi_p) * std::sin(theta);
  m(2, 2) = -std::cos(theta);
  return m;
}

EffectiveParams effective_parameters(const ThreeWaveParams& p, double t) {
  const Complex i(0.0, 1.0);
  const double op = p.pump(t);
  const double os = p.stokes(t);
  const double oc = p.chirality_sign * p.control(t);
  const double omega_sq = op * op + oc * oc;
  if (omega_sq <= 0.0)
    throw std::domain_error(
        "mixing angle undefined: Omega_P and Omega_C both vanish");

  EffectiveParams out;
  out.omega_p = std::exp(i * p.phi_p) * std::sqrt(omega_sq);
  out.omega_s =
      (2.0 * std::exp(-i * p.phi_p) * (p.delta_2 - p.delta_3) * op * oc +
       (std::exp(-2.0 * i * (p.phi_p + p.phi_s)) * oc * oc - op * op) *
           std::exp(i * p.phi_s) * os) /
      omega_sq;
  const double cross = op * os * oc * std::cos(p.phi_p + p.phi_s);
  out.delta_2 =
      (p.delta_3 * oc * oc + p.delta_2 * op * op + cross) / omega_sq;
  out.delta_3 =
      (p.delta_2 * oc * oc + p.delta_3 * op * op + cross) / omega_sq;
  return out;
}

StirapResult prepare_superposition(int sigma, const PulseSpec& pump,
                                   const PulseSpec& stokes, double phi_p,
                                   double phi_s, double t_start, double t_end,
                                   double tolerance) {
  if (sigma != +1 && sigma != -1)
    throw std::invalid_argument("sigma must be +1 or -1");
  if (!(t_end > t_start))
    throw std::invalid_argument("time span must be ordered");
  if (std::abs(phi_p + phi_s - M_PI / 2.0) > 1e-9)
    throw std::invalid_argument(
        "phi_p + phi_s must equal pi/2 so the transformed detuning vanishes");

  ThreeWaveParams tw;
  tw.pump = pump;
  tw.stokes = stokes;
  tw.control = pump;  // locked ratio, theta = sigma * pi/4
  tw.phi_p = phi_p;
  tw.phi_s = phi_s;
  tw.chirality_sign = sigma;
  tw.validate();

  StateVector c0 = StateVector::Zero(3);
  c0[0] = 1.0;
  auto h_of_t = [&tw, t_start](double t) {
    return build_three_wave_hamiltonian(tw, t_start + t);
  };
  const std::vector<double> grid{t_end - t_start};
  EvolutionResult evo = evolve_timedep(h_of_t, c0, grid, tolerance);

  const double theta = sigma * M_PI / 4.0;
  StateVector target = StateVector::Zero(3);
  target[1] = std::sin(theta) * std::exp(Complex(0.0, phi_p));
  target[2] = -std::cos(theta);

  StirapResult out;
  out.final_state = evo.states.back();
  out.target = target;
  out.fidelity = std::norm(target.dot(out.final_state));
  out.adiabatic_warning = out.fidelity < 0.9;
  return out;
}

}  // namespace lics
