#ifndef SEIRVAC_GAINS_HPP_
#define SEIRVAC_GAINS_HPP_

#include "seirvac/types.hpp"

namespace seirvac {

/// Coefficients of the affine-plus-bilinear vaccination law. k5 has units
/// 1/individuals since it multiplies S_hat*I_hat; g is rate-like.
template <typename Scalar>
struct ControlGains {
  Scalar k1{0};
  Scalar k2{0};
  Scalar k3{0};
  Scalar k4{0};
  Scalar k5{0};
  Scalar g{0};

  ControlGains scaled(Scalar factor) const {
    return {k1 * factor, k2 * factor, k3 * factor, k4 * factor, k5 * factor, g * factor};
  }
};

/// Constant reference values used to split the time-varying matrices into
/// a constant part plus a perturbation. `b011`/`b021` are the free entries of
/// the constant coupling block.
template <typename Scalar>
struct DecompositionAnchors {
  Scalar i_r{0};
  Scalar i_hat_r{0};
  Scalar b011{0};
  Scalar b021{0};
};

}  // namespace seirvac

#endif  // SEIRVAC_GAINS_HPP_
