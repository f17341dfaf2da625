#include "lics/darkbright.hpp"

#include <cmath>
#include <sstream>

#include "lics/errors.hpp"

namespace lics {

StateVector DarkBrightDecomposition::bright_ground() const {
  return w.row(w.rows() - 2).adjoint();
}

StateVector DarkBrightDecomposition::bright_excited() const {
  return w.row(w.rows() - 1).adjoint();
}

StateVector DarkBrightDecomposition::dark_state(int k) const {
  if (k < 0 || k >= w.rows() - 2)
    throw std::invalid_argument("dark state index out of range");
  return w.row(k).adjoint();
}

namespace {

Eigen::Matrix2d givens(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), std::sin(angle), -std::sin(angle), std::cos(angle);
  return r;
}

// Second-nearest-neighbour rotation on a 3-block (mixes rows 0 and 2).
Eigen::Matrix3d givens_skip(double angle) {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  r(0, 0) = std::cos(angle);
  r(0, 2) = std::sin(angle);
  r(2, 0) = -std::sin(angle);
  r(2, 2) = std::cos(angle);
  return r;
}

// Places the same 2x2 rotation at rows (a, a+1) and (b, b+1).
Eigen::MatrixXd paired_rotation(double angle, int a, int b) {
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(10, 10);
  u.block<2, 2>(a, a) = givens(angle);
  u.block<2, 2>(b, b) = givens(angle);
  return u;
}

Eigen::MatrixXd paired_skip_rotation(double angle, int a, int b) {
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(10, 10);
  u.block<3, 3>(a, a) = givens_skip(angle);
  u.block<3, 3>(b, b) = givens_skip(angle);
  return u;
}

}  // namespace

ComplexMatrix build_composite_rotation_5x5() {
  const double a1 = M_PI / 2.0;
  const double a2 = M_PI / 4.0;
  const double beta = -std::atan(1.0 / std::sqrt(2.0));
  const double a3 = -M_PI / 3.0;
  const double a4 = 0.5 * std::atan(4.0 / 3.0);

  const Eigen::MatrixXd u1 = paired_rotation(a1, 0, 5);
  const Eigen::MatrixXd u2 = paired_rotation(a2, 1, 6);
  const Eigen::MatrixXd ub = paired_skip_rotation(beta, 0, 5);
  const Eigen::MatrixXd u3 = paired_rotation(a3, 2, 7);
  const Eigen::MatrixXd u4 = paired_rotation(a4, 3, 8);

  // Row shuffle bringing the two uniform superposition rows to the
  // bottom and interleaving the dark rows.
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(10, 10);
  const int perm[10] = {0, 1, 2, 4, 7, 5, 6, 9, 3, 8};
  for (int r = 0; r < 10; ++r) s(r, perm[r]) = 1.0;

  return (s * u4 * u3 * ub * u2 * u1).cast<Complex>();
}

DarkBrightDecomposition decompose(const ComplexMatrix& h,
                                  const ComplexMatrix& w, int n_g, int n_e) {
  const int n = n_g + n_e;
  if (h.rows() != n || h.cols() != n || w.rows() != n || w.cols() != n)
    throw std::invalid_argument("dimension mismatch in decompose");

  const ComplexMatrix transformed = w * h * w.adjoint();
  const int nd = n - 2;  // zero when (n_g, n_e) = (1, 1)

  if (nd > 0) {
    const double leak_upper =
        transformed.topRightCorner(nd, 2).cwiseAbs().maxCoeff();
    const double leak_lower =
        transformed.bottomLeftCorner(2, nd).cwiseAbs().maxCoeff();
    if (std::max(leak_upper, leak_lower) > 1e-9) {
      std::ostringstream msg;
      msg << "dark/bright off-block leakage "
          << std::max(leak_upper, leak_lower)
          << " exceeds 1e-9; H is not a degenerate multilevel Hamiltonian "
             "compatible with W";
      throw NumericalError(msg.str());
    }
    const ComplexMatrix dark = transformed.topLeftCorner(nd, nd);
    double off_dark = 0.0;
    for (int r = 0; r < nd; ++r)
      for (int c = 0; c < nd; ++c)
        if (r != c) off_dark = std::max(off_dark, std::abs(dark(r, c)));
    if (off_dark > 1e-9) throw NumericalError("dark block is not diagonal");
  }

  DarkBrightDecomposition out;
  out.w = w;
  out.bright = transformed.bottomRightCorner(2, 2);
  out.dark_energies = transformed.topLeftCorner(nd, nd).diagonal();
  out.n_g = n_g;
  out.n_e = n_e;
  return out;
}

DarkBrightDecomposition generic_decomposition(const MultiLicsParams& p) {
  p.validate();
  const int n = p.dim();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);

  // Dark rows: the deterministic orthonormal completion of the uniform
  // vector within each sector, row k mixing the first k+1 sector states
  // against state k+1.
  int row = 0;
  auto fill_sector = [&](int offset, int size) {
    for (int k = 1; k < size; ++k, ++row) {
      const double norm = 1.0 / std::sqrt(double(k) * (k + 1));
      for (int j = 0; j < k; ++j) w(row, offset + j) = norm;
      w(row, offset + k) = -double(k) * norm;
    }
  };
  fill_sector(0, p.n_g);
  fill_sector(p.n_g, p.n_e);

  // Bright rows: uniform superpositions over each sector.
  for (int j = 0; j < p.n_g; ++j) w(n - 2, j) = 1.0 / std::sqrt(double(p.n_g));
  for (int j = 0; j < p.n_e; ++j)
    w(n - 1, p.n_g + j) = 1.0 / std::sqrt(double(p.n_e));

  return decompose(build_multilevel_hamiltonian(p), w.cast<Complex>(), p.n_g,
                   p.n_e);
}

double bright_population(const DarkBrightDecomposition& d,
                         const StateVector& c0) {
  if (c0.size() != d.w.rows())
    throw std::invalid_argument("dimension mismatch in bright_population");
  const Complex bg = d.bright_ground().dot(c0);
  const Complex be = d.bright_excited().dot(c0);
  return std::norm(bg) + std::norm(be);
}

std::pair<double, double> dark_level_energies(const MultiLicsParams& p) {
  const double eps_g = 0.5 * (2.0 * p.s_g + p.gamma_g * p.q_gg);
  const double eps_e =
      0.5 * (2.0 * p.delta + 2.0 * p.s_e + p.gamma_e * p.q_ee);
  return {eps_g, eps_e};
}

}  // namespace lics
