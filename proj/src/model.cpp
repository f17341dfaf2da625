#include "lics/model.hpp"

#include <stdexcept>

namespace lics {

void CyclicLicsParams::validate() const {
  if (gamma_g < 0.0) throw std::invalid_argument("gamma_g must be >= 0");
  if (gamma_e < 0.0) throw std::invalid_argument("gamma_e must be >= 0");
  if (chirality_sign != +1 && chirality_sign != -1)
    throw std::invalid_argument("chirality_sign must be +1 or -1");
  if (!std::isfinite(gamma_g) || !std::isfinite(gamma_e) ||
      !std::isfinite(q) || !std::isfinite(s_g) || !std::isfinite(s_e) ||
      !std::isfinite(delta) || !std::isfinite(omega_c))
    throw std::invalid_argument("cyclic parameters must be finite");
}

void MultiLicsParams::validate() const {
  if (n_g < 1 || n_e < 1)
    throw std::invalid_argument("n_g and n_e must be >= 1");
  if (gamma_g < 0.0) throw std::invalid_argument("gamma_g must be >= 0");
  if (gamma_e < 0.0) throw std::invalid_argument("gamma_e must be >= 0");
  if (!std::isfinite(gamma_g) || !std::isfinite(gamma_e) ||
      !std::isfinite(q_gg) || !std::isfinite(q_ee) || !std::isfinite(q_ge) ||
      !std::isfinite(s_g) || !std::isfinite(s_e) || !std::isfinite(delta))
    throw std::invalid_argument("multilevel parameters must be finite");
}

ComplexMatrix build_cyclic_hamiltonian(const CyclicLicsParams& p) {
  p.validate();
  const Complex i(0.0, 1.0);
  const double sigma = static_cast<double>(p.chirality_sign);
  const Complex off = sigma * p.omega_c - (p.q + i) * p.gamma_ge();
  ComplexMatrix h(2, 2);
  h(0, 0) = 2.0 * p.s_g - i * p.gamma_g;
  h(0, 1) = off;
  h(1, 0) = off;
  h(1, 1) = 2.0 * p.delta + 2.0 * p.s_e - i * p.gamma_e;
  return 0.5 * h;
}

ComplexMatrix build_multilevel_hamiltonian(const MultiLicsParams& p) {
  p.validate();
  const Complex i(0.0, 1.0);
  const int n = p.dim();
  ComplexMatrix h(n, n);

  const Complex gg_diag = -2.0 * p.s_g + i * p.gamma_g;
  const Complex gg_off = (p.q_gg + i) * p.gamma_g;
  const Complex ee_diag = -2.0 * p.s_e - 2.0 * p.delta + i * p.gamma_e;
  const Complex ee_off = (p.q_ee + i) * p.gamma_e;
  const Complex cross = (p.q_ge + i) * p.gamma_ge();

  for (int r = 0; r < p.n_g; ++r)
    for (int c = 0; c < p.n_g; ++c) h(r, c) = (r == c) ? gg_diag : gg_off;
  for (int r = 0; r < p.n_e; ++r)
    for (int c = 0; c < p.n_e; ++c)
      h(p.n_g + r, p.n_g + c) = (r == c) ? ee_diag : ee_off;
  for (int r = 0; r < p.n_g; ++r)
    for (int c = 0; c < p.n_e; ++c) {
      h(r, p.n_g + c) = cross;
      h(p.n_g + c, r) = cross;
    }
  return -0.5 * h;
}

}  // namespace lics
