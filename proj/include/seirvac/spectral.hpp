#ifndef SEIRVAC_SPECTRAL_HPP_
#define SEIRVAC_SPECTRAL_HPP_

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "seirvac/polynomial.hpp"

namespace seirvac {

struct MetzlerResult {
  bool is_metzler = true;
  // Zero-based (row, col) of every negative off-diagonal entry.
  std::vector<std::pair<int, int>> violations;
};

template <typename Derived>
MetzlerResult metzler_check(const Eigen::MatrixBase<Derived>& m) {
  MetzlerResult out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r != c && m(r, c) < 0) {
        out.is_metzler = false;
        out.violations.emplace_back(static_cast<int>(r), static_cast<int>(c));
      }
    }
  }
  return out;
}

/// Eigenvalues as roots of the characteristic polynomial.
template <typename Derived>
std::vector<std::complex<typename Derived::Scalar>> eigenvalues_via_charpoly(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() == 1) return {std::complex<Scalar>(m(0, 0), Scalar(0))};
  const auto roots = polynomial_roots(characteristic_polynomial(m));
  if (!roots.converged) {
    throw std::runtime_error("eigenvalues: root finder did not converge");
  }
  return roots.roots;
}

namespace detail {

template <typename Scalar>
Scalar abscissa_impl(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  const Eigen::Index n = m.rows();
  // A zero upper-right block at split k means the spectrum is the union of
  // the two diagonal blocks' spectra.
  for (Eigen::Index k = 1; k < n; ++k) {
    if ((m.topRightCorner(k, n - k).array() == Scalar(0)).all()) {
      return std::max(abscissa_impl<Scalar>(m.topLeftCorner(k, k)),
                      abscissa_impl<Scalar>(m.bottomRightCorner(n - k, n - k)));
    }
  }
  Scalar best = -std::numeric_limits<Scalar>::infinity();
  for (const auto& z : eigenvalues_via_charpoly(m)) best = std::max(best, z.real());
  return best;
}

}  // namespace detail

/// max Re(lambda) over the eigenvalues of `m`.
template <typename Derived>
typename Derived::Scalar stability_abscissa(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return detail::abscissa_impl<Scalar>(m.eval());
}

/// Largest singular value by power iteration on M^T M.
template <typename Derived>
typename Derived::Scalar spectral_norm(const Eigen::MatrixBase<Derived>& m,
                                       int max_iterations = 2000) {
  using Scalar = typename Derived::Scalar;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const auto mtm = (m.transpose() * m).eval();
  if (mtm.cwiseAbs().maxCoeff() == Scalar(0)) return Scalar(0);
  Vec v(m.cols());
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = Scalar(1) + Scalar(k) / Scalar(7 * v.size());
  v.normalize();
  Scalar lambda = Scalar(0);
  for (int it = 0; it < max_iterations; ++it) {
    Vec w = mtm * v;
    const Scalar wn = w.norm();
    if (wn == Scalar(0)) {
      // Started in the null space; restart on a basis vector.
      v.setZero();
      v(it % v.size()) = Scalar(1);
      continue;
    }
    const Scalar next = v.dot(w);
    v = w / wn;
    if (std::abs(next - lambda) <= Scalar(1e-15) * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(std::max(lambda, Scalar(0)));
}

/// e^{m t} by scaling and squaring of a truncated Taylor series.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>
matrix_exponential(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar t) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>;
  if (!std::isfinite(t)) throw std::invalid_argument("matrix_exponential: t must be finite");
  Mat a = m * t;
  const Scalar norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > Scalar(0.5)) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / Scalar(0.5))));
  }
  a /= std::ldexp(Scalar(1), squarings);

  // With ||a|| <= 1/2, 18 terms leave a remainder below 1e-20.
  const Mat id = Mat::Identity(m.rows(), m.cols());
  Mat result = id;
  Mat term = id;
  for (int k = 1; k <= 18; ++k) {
    term = (term * a) / Scalar(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return result;
}

}  // namespace seirvac

#endif  // SEIRVAC_SPECTRAL_HPP_
