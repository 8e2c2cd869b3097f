#ifndef SEIRVAC_TYPES_HPP_
#define SEIRVAC_TYPES_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace seirvac {

template <typename Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using Vector8 = Eigen::Matrix<Scalar, 8, 1>;
template <typename Scalar>
using Matrix8 = Eigen::Matrix<Scalar, 8, 8>;

using Vector4d = Vector4<double>;
using Matrix4d = Matrix4<double>;
using Vector8d = Vector8<double>;
using Matrix8d = Matrix8<double>;

// Index of each compartment in the stacked (S, E, I, R) vector.
enum Compartment : int { kS = 0, kE = 1, kI = 2, kR = 3 };

struct PlantTag {};
struct ObserverTag {};

/// Four SEIR compartments in individuals. The tag keeps plant and observer
/// states from being mixed up; arithmetic goes through `vec()`.
template <typename Scalar, typename Tag>
struct Compartments {
  Scalar s{0};
  Scalar e{0};
  Scalar i{0};
  Scalar r{0};

  Compartments() = default;
  Compartments(Scalar s_, Scalar e_, Scalar i_, Scalar r_) : s(s_), e(e_), i(i_), r(r_) {}

  static Compartments fromVector(const Vector4<Scalar>& v) { return {v(0), v(1), v(2), v(3)}; }
  Vector4<Scalar> vec() const { return Vector4<Scalar>(s, e, i, r); }
  Scalar sum() const { return s + e + i + r; }
  Scalar minComponent() const { return std::min(std::min(s, e), std::min(i, r)); }

  bool operator==(const Compartments&) const = default;
};

template <typename Scalar>
using PopulationState = Compartments<Scalar, PlantTag>;
template <typename Scalar>
using ObserverState = Compartments<Scalar, ObserverTag>;

/// Closed interval [lo, hi].
template <typename Scalar>
struct Interval {
  Scalar lo{0};
  Scalar hi{0};
};

/// Raised when integration produces a non-finite value.
class NumericalAbort : public std::runtime_error {
 public:
  NumericalAbort(const std::string& what, double t) : std::runtime_error(what), time_(t) {}
  double time() const { return time_; }

 private:
  double time_;
};

}  // namespace seirvac

#endif  // SEIRVAC_TYPES_HPP_
