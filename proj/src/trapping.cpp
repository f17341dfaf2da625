#include "lics/trapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "lics/errors.hpp"
#include "lics/propagator.hpp"

namespace lics {

double trapping_detuning_two_level(const CyclicLicsParams& p) {
  p.validate();
  if (p.gamma_g + p.gamma_e <= 0.0)
    throw std::invalid_argument("trapping requires gamma_g + gamma_e > 0");
  return 0.5 * p.q * (p.gamma_g - p.gamma_e) + p.s_g - p.s_e;
}

double trapping_detuning_cyclic(const CyclicLicsParams& p, int branch_sign) {
  p.validate();
  if (branch_sign != +1 && branch_sign != -1)
    throw std::invalid_argument("branch_sign must be +1 or -1");
  if (p.gamma_g == 0.0)
    throw std::invalid_argument("division by zero: gamma_g must be > 0");
  if (p.gamma_e == 0.0)
    throw std::invalid_argument("division by zero: gamma_e must be > 0");
  const double num = p.q * p.gamma_e * p.gamma_g +
                     branch_sign * p.omega_c * p.gamma_ge();
  return p.delta_s() -
         (p.gamma_e - p.gamma_g) * num / (2.0 * p.gamma_e * p.gamma_g);
}

namespace {

double min_abs_imag_eigenvalue(const ComplexMatrix& h) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(h, false);
  if (es.info() != Eigen::Success)
    throw NumericalError("eigenvalue computation failed");
  return es.eigenvalues().imag().cwiseAbs().minCoeff();
}

}  // namespace

TrappingResult trapping_detuning_numeric(const HamiltonianBuilder& builder,
                                         double delta_lo, double delta_hi,
                                         int coarse_points) {
  if (!(delta_hi > delta_lo))
    throw std::invalid_argument("bracket must satisfy delta_lo < delta_hi");
  if (coarse_points < 3)
    throw std::invalid_argument("coarse_points must be >= 3");

  auto objective = [&](double delta) {
    return min_abs_imag_eigenvalue(builder(delta));
  };

  // Coarse scan to bracket the minimum.
  std::vector<double> xs(coarse_points), ys(coarse_points);
  const double step = (delta_hi - delta_lo) / (coarse_points - 1);
  int best = 0;
  for (int i = 0; i < coarse_points; ++i) {
    xs[i] = delta_lo + i * step;
    ys[i] = objective(xs[i]);
    if (ys[i] < ys[best]) best = i;
  }
  if (best == 0 || best == coarse_points - 1) {
    std::ostringstream msg;
    msg << "no interior minimum of min|Im lambda| in bracket [" << delta_lo
        << ", " << delta_hi << "]; scan trace:";
    for (int i = 0; i < coarse_points; i += std::max(1, coarse_points / 16))
      msg << " (" << xs[i] << ", " << ys[i] << ")";
    throw NotFoundError(msg.str());
  }

  // Golden-section on the bracketing interval.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = xs[best - 1], b = xs[best + 1];
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = objective(x1), f2 = objective(x2);
  for (int iter = 0; iter < 200 && (b - a) > 1e-13 * std::max(1.0, std::abs(a));
       ++iter) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = objective(x2);
    }
  }
  double x_min = 0.5 * (a + b);
  double f_min = objective(x_min);

  // Local parabolic polish.
  double h = std::max(1e-7, 1e-9 * std::abs(x_min));
  for (int iter = 0; iter < 4; ++iter) {
    const double fl = objective(x_min - h), fr = objective(x_min + h);
    const double denom = fl - 2.0 * f_min + fr;
    if (denom <= 0.0) break;
    const double shift = 0.5 * h * (fl - fr) / denom;
    const double cand = x_min + std::clamp(shift, -h, h);
    const double fc = objective(cand);
    if (fc < f_min) {
      x_min = cand;
      f_min = fc;
    }
    h *= 0.25;
  }
  return {x_min, f_min};
}

FanoProfile fano_scan(const HamiltonianBuilder& builder, double delta_lo,
                      double delta_hi, int n_points, double t_probe,
                      const StateVector& c0, int threads) {
  if (n_points < 3) throw std::invalid_argument("n_points must be >= 3");
  if (!(delta_hi >= delta_lo))
    throw std::invalid_argument("delta range must be ordered");
  if (t_probe < 0.0) throw std::invalid_argument("t_probe must be >= 0");
  threads = std::max(1, threads);

  FanoProfile out;
  out.t_probe = t_probe;
  out.delta.resize(n_points);
  out.ionization.assign(n_points, std::numeric_limits<double>::quiet_NaN());
  const double step =
      n_points > 1 ? (delta_hi - delta_lo) / (n_points - 1) : 0.0;
  for (int i = 0; i < n_points; ++i) out.delta[i] = delta_lo + i * step;

  std::vector<std::string> failures(n_points);
  const std::vector<double> probe_grid{t_probe};
  auto eval = [&](double delta) {
    return evolve_constant(builder(delta), c0, probe_grid).ionization.front();
  };
  auto worker = [&](int first, int last) {
    for (int i = first; i < last; ++i) {
      try {
        out.ionization[i] = eval(out.delta[i]);
      } catch (const std::exception& e) {
        failures[i] = e.what();  // scan continues past failed points
      }
    }
  };
  if (threads == 1) {
    worker(0, n_points);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (n_points + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int first = t * chunk;
      if (first >= n_points) break;
      pool.emplace_back(worker, first, std::min(n_points, first + chunk));
    }
    for (auto& th : pool) th.join();
  }
  for (int i = 0; i < n_points; ++i)
    if (!failures[i].empty()) out.failures.emplace_back(i, failures[i]);

  // Local minima of the sampled grid, refined by one parabolic step.
  for (int i = 1; i + 1 < n_points; ++i) {
    const double yl = out.ionization[i - 1], ym = out.ionization[i],
                 yr = out.ionization[i + 1];
    if (std::isnan(yl) || std::isnan(ym) || std::isnan(yr)) continue;
    if (!(ym < yl && ym < yr)) continue;
    FanoMinimum m{out.delta[i], ym};
    const double denom = yl - 2.0 * ym + yr;
    if (denom > 0.0) {
      const double shift = 0.5 * step * (yl - yr) / denom;
      const double cand = out.delta[i] + std::clamp(shift, -step, step);
      try {
        const double yc = eval(cand);
        if (yc < m.ionization) m = {cand, yc};
      } catch (const std::exception&) {
        // keep the grid minimum
      }
    }
    out.minima.push_back(m);
  }
  return out;
}

}  // namespace lics
