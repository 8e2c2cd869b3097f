#ifndef SEIRVAC_POLYNOMIAL_HPP_
#define SEIRVAC_POLYNOMIAL_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace seirvac {

/// Real polynomial with coefficients in ascending degree:
/// p(s) = c[0] + c[1] s + ... + c[n] s^n.
template <typename Scalar>
class Polynomial {
 public:
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Polynomial() : coeffs_(Coefficients::Zero(1)) {}
  explicit Polynomial(Coefficients c) : coeffs_(std::move(c)) { trim(); }
  Polynomial(std::initializer_list<Scalar> c) : coeffs_(static_cast<Eigen::Index>(c.size())) {
    std::copy(c.begin(), c.end(), coeffs_.data());
    trim();
  }

  /// prod_i (s - roots[i]) for real roots.
  static Polynomial fromRoots(const std::vector<Scalar>& roots) {
    Polynomial p{Scalar(1)};
    for (Scalar r : roots) p = p * Polynomial{-r, Scalar(1)};
    return p;
  }

  /// Monic real polynomial from roots closed under conjugation. Only the
  /// roots with nonnegative imaginary part are read; each complex one
  /// contributes its conjugate pair.
  static Polynomial fromConjugateRoots(const std::vector<std::complex<Scalar>>& roots) {
    Polynomial p{Scalar(1)};
    for (const auto& z : roots) {
      if (z.imag() == Scalar(0)) {
        p = p * Polynomial{-z.real(), Scalar(1)};
      } else if (z.imag() > Scalar(0)) {
        p = p * Polynomial{std::norm(z), Scalar(-2) * z.real(), Scalar(1)};
      }
    }
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.size() == 1 && coeffs_(0) == Scalar(0); }
  const Coefficients& coefficients() const { return coeffs_; }
  Scalar operator[](int k) const { return k <= degree() ? coeffs_(k) : Scalar(0); }
  Scalar leading() const { return coeffs_(degree()); }

  template <typename T>
  T operator()(const T& s) const {
    T acc = T(coeffs_(degree()));
    for (int k = degree() - 1; k >= 0; --k) acc = acc * s + T(coeffs_(k));
    return acc;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Coefficients c = Coefficients::Zero(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (Eigen::Index i = 0; i < a.coeffs_.size(); ++i)
      for (Eigen::Index j = 0; j < b.coeffs_.size(); ++j) c(i + j) += a.coeffs_(i) * b.coeffs_(j);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Coefficients c = Coefficients::Zero(std::max(a.coeffs_.size(), b.coeffs_.size()));
    c.head(a.coeffs_.size()) += a.coeffs_;
    c.head(b.coeffs_.size()) += b.coeffs_;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(Scalar k, const Polynomial& a) {
    return Polynomial(Coefficients(k * a.coeffs_));
  }

 private:
  void trim() {
    if (coeffs_.size() == 0) {
      coeffs_ = Coefficients::Zero(1);
      return;
    }
    Eigen::Index n = coeffs_.size();
    while (n > 1 && coeffs_(n - 1) == Scalar(0)) --n;
    coeffs_.conservativeResize(n);
  }

  Coefficients coeffs_;
};

using RealPolynomial = Polynomial<double>;

/// det(sI - M) by the Faddeev-LeVerrier recurrence.
template <typename Derived>
Polynomial<typename Derived::Scalar> characteristic_polynomial(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = m.rows();
  eigen_assert(m.rows() == m.cols());
  typename Polynomial<Scalar>::Coefficients c(n + 1);
  c(n) = Scalar(1);
  const Mat a = m;
  Mat mk = Mat::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = a * mk;
    mk.diagonal().array() += c(n - k + 1);
    c(n - k) = -(a * mk).trace() / Scalar(k);
  }
  return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
struct RootsResult {
  std::vector<std::complex<Scalar>> roots;
  bool converged = false;
  int iterations = 0;
  // max over roots of |p(z)| / sum_k |c_k| |z|^k
  Scalar max_relative_residual = Scalar(0);
};

namespace detail {

template <typename Scalar>
Scalar relative_residual(const Polynomial<Scalar>& p, const std::complex<Scalar>& z) {
  const Scalar az = std::abs(z);
  Scalar scale = Scalar(0);
  Scalar power = Scalar(1);
  for (int k = 0; k <= p.degree(); ++k) {
    scale += std::abs(p[k]) * power;
    power *= az;
  }
  if (scale == Scalar(0)) return Scalar(0);
  return std::abs(p(z)) / scale;
}

// Snap near-real roots onto the axis and average conjugate partners so the
// output is closed under conjugation.
template <typename Scalar>
void pair_conjugates(std::vector<std::complex<Scalar>>& roots, Scalar tol) {
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    auto& z = roots[i];
    if (std::abs(z.imag()) <= tol * (Scalar(1) + std::abs(z))) {
      z.imag(Scalar(0));
      used[i] = true;
      continue;
    }
    std::size_t best = roots.size();
    Scalar best_dist = std::numeric_limits<Scalar>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j]) continue;
      const Scalar d = std::abs(roots[j] - std::conj(z));
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    used[i] = true;
    if (best == roots.size()) continue;
    used[best] = true;
    const Scalar re = (z.real() + roots[best].real()) / Scalar(2);
    const Scalar im = (std::abs(z.imag()) + std::abs(roots[best].imag())) / Scalar(2);
    z = {re, im};
    roots[best] = {re, -im};
  }
}

}  // namespace detail

/// All complex roots by Durand-Kerner (Weierstrass) iteration, followed by
/// a Newton polish. Exact zero roots are deflated first.
template <typename Scalar>
RootsResult<Scalar> polynomial_roots(const Polynomial<Scalar>& poly, int max_iterations = 5000) {
  using Complex = std::complex<Scalar>;
  if (poly.degree() < 1) {
    throw std::invalid_argument("polynomial_roots: degree must be at least 1");
  }
  RootsResult<Scalar> result;

  int zeros = 0;
  while (poly[zeros] == Scalar(0)) ++zeros;
  typename Polynomial<Scalar>::Coefficients tail = poly.coefficients().tail(poly.degree() + 1 - zeros);
  tail /= tail(tail.size() - 1);
  const Polynomial<Scalar> monic(tail);
  const int n = monic.degree();

  for (int k = 0; k < zeros; ++k) result.roots.emplace_back(Scalar(0), Scalar(0));
  if (n == 0) {
    result.converged = true;
    return result;
  }

  Scalar radius = Scalar(0);
  for (int k = 1; k <= n; ++k) {
    radius = std::max(radius, std::pow(std::abs(monic[n - k]), Scalar(1) / Scalar(k)));
  }
  if (radius == Scalar(0)) radius = Scalar(1);

  std::vector<Complex> z(n);
  const Scalar two_pi = Scalar(2) * Scalar(EIGEN_PI);
  for (int k = 0; k < n; ++k) {
    z[k] = std::polar(radius, two_pi * Scalar(k) / Scalar(n) + Scalar(0.4));
  }

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  int it = 0;
  for (; it < max_iterations; ++it) {
    Scalar max_step = Scalar(0);
    for (int i = 0; i < n; ++i) {
      Complex denom(1);
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= (z[i] - z[j]);
      }
      if (denom == Complex(0)) denom = Complex(eps, eps);
      const Complex step = monic(z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (Scalar(1) + std::abs(z[i])));
    }
    if (max_step <= Scalar(4) * eps) break;
  }
  result.iterations = it;

  // Newton polish, kept only where it lowers the residual.
  const Polynomial<Scalar> deriv = [&] {
    typename Polynomial<Scalar>::Coefficients d(n);
    for (int k = 1; k <= n; ++k) d(k - 1) = Scalar(k) * monic[k];
    return Polynomial<Scalar>(d);
  }();
  for (auto& zi : z) {
    for (int pass = 0; pass < 3; ++pass) {
      const Complex dp = deriv(zi);
      if (dp == Complex(0)) break;
      const Complex candidate = zi - monic(zi) / dp;
      if (detail::relative_residual(monic, candidate) < detail::relative_residual(monic, zi)) {
        zi = candidate;
      } else {
        break;
      }
    }
  }

  detail::pair_conjugates(z, Scalar(1e-7));
  for (const auto& zi : z) {
    result.max_relative_residual =
        std::max(result.max_relative_residual, detail::relative_residual(monic, zi));
    result.roots.push_back(zi);
  }
  result.converged = result.max_relative_residual <= Scalar(1e-9);
  return result;
}

/// First column of the Routh array. A zero pivot in a row that is not
/// identically zero is replaced by a small epsilon; an all-zero row stops
/// the construction and sets `singular`.
template <typename Scalar>
struct RouthArray {
  std::vector<Scalar> first_column;
  bool singular = false;
  bool zero_pivot = false;
  int sign_changes = 0;
};

template <typename Scalar>
RouthArray<Scalar> routh_array(const Polynomial<Scalar>& poly) {
  const int n = poly.degree();
  RouthArray<Scalar> out;
  const Scalar lead = poly.leading();
  const int width = n / 2 + 1;
  std::vector<Scalar> upper(width, Scalar(0)), lower(width, Scalar(0));
  Scalar scale = Scalar(0);
  for (int k = 0; k <= n; ++k) scale = std::max(scale, std::abs(poly[k] / lead));
  const Scalar tiny = std::numeric_limits<Scalar>::epsilon() * scale;
  for (int j = 0; j < width; ++j) {
    upper[j] = poly[n - 2 * j] / lead;
    lower[j] = (n - 2 * j - 1 >= 0) ? poly[n - 2 * j - 1] / lead : Scalar(0);
  }
  out.first_column.push_back(upper[0]);
  for (int row = 1; row <= n; ++row) {
    bool all_zero = std::all_of(lower.begin(), lower.end(),
                                [&](Scalar v) { return std::abs(v) <= tiny; });
    if (all_zero) {
      out.singular = true;
      break;
    }
    if (std::abs(lower[0]) <= tiny) {
      lower[0] = tiny;
      out.zero_pivot = true;
    }
    out.first_column.push_back(lower[0]);
    std::vector<Scalar> next(width, Scalar(0));
    for (int j = 0; j + 1 < width; ++j) {
      next[j] = (lower[0] * upper[j + 1] - upper[0] * lower[j + 1]) / lower[0];
    }
    upper = std::move(lower);
    lower = std::move(next);
  }
  for (std::size_t k = 1; k < out.first_column.size(); ++k) {
    if ((out.first_column[k] > 0) != (out.first_column[k - 1] > 0)) ++out.sign_changes;
  }
  return out;
}

/// True iff every root has negative real part, via the Routh array.
template <typename Scalar>
bool hurwitz_check(const Polynomial<Scalar>& poly) {
  if (poly.degree() < 1) {
    throw std::invalid_argument("hurwitz_check: degree must be at least 1");
  }
  // Necessary condition: every coefficient strictly of the leading sign.
  const Scalar lead = poly.leading();
  for (int k = 0; k <= poly.degree(); ++k) {
    if (!(poly[k] / lead > Scalar(0))) return false;
  }
  const RouthArray<Scalar> ra = routh_array(poly);
  if (ra.singular || ra.zero_pivot) return false;
  return std::all_of(ra.first_column.begin(), ra.first_column.end(),
                     [](Scalar v) { return v > Scalar(0); });
}

}  // namespace seirvac

#endif  // SEIRVAC_POLYNOMIAL_HPP_
