#ifndef SEIRVAC_TESTS_TEST_SUPPORT_HPP_
#define SEIRVAC_TESTS_TEST_SUPPORT_HPP_

#include <random>

#include "seirvac/gains.hpp"
#include "seirvac/model.hpp"
#include "seirvac/observer.hpp"

namespace seirvac::testing {

inline EpidemicParams<double> ref_params() {
  return {1.0 / 235.0, 1.0 / 14.0, 1.46, 0.5, 0.5, 1000.0};
}

inline ObserverParams<double> ref_observer() {
  return ObserverParams<double>::matching(ref_params());
}

inline ControlGains<double> ref_gains() {
  return {1.0, -0.1, -0.5, 0.95 / 14.0, -1.46 / 1000.0, 1.0 / 235.0};
}

class Rng {
 public:
  explicit Rng(unsigned long long seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  /// Random nonnegative 4-vector summing to n.
  Vector4d simplex(double n) {
    Vector4d v;
    for (int j = 0; j < 4; ++j) v(j) = -std::log(uniform(1e-12, 1.0));
    return v * (n / v.sum());
  }

  EpidemicParams<double> params(double n = 1000.0) {
    return {uniform(1e-4, 0.05), uniform(0.0, 0.2), uniform(0.1, 3.0),
            uniform(0.05, 1.0), uniform(0.05, 1.0), n};
  }

  ObserverParams<double> observer(double n = 1000.0) {
    return {uniform(1e-4, 0.05), uniform(0.0, 0.2), uniform(0.1, 3.0),
            uniform(0.05, 1.0), uniform(0.05, 1.0), n};
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace seirvac::testing

#endif  // SEIRVAC_TESTS_TEST_SUPPORT_HPP_
