#pragma once

// The umbral coefficient functional phi: r -> phi(r). The umbral shift
// c^r phi(0) = phi(r) is realized by evaluating phi at r, which must work for
// negative and half-integer r.

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "error.hpp"
#include "special.hpp"

namespace rmt {

class CoefficientFn {
 public:
  using Params = std::map<std::string, double>;

  /// Throws DomainError when phi(0) == 0.
  CoefficientFn(std::string name, Params params, std::function<double(double)> eval)
      : name_(std::move(name)), params_(std::move(params)), eval_(std::move(eval)) {
    if (!eval_) throw DomainError("coefficient '" + name_ + "': empty functional");
    if ((*this)(0.0) == 0.0)
      throw DomainError("coefficient '" + name_ + "': phi(0) must be non-zero");
  }

  double operator()(double r) const { return eval_(r); }

  const std::string& name() const { return name_; }
  const Params& params() const { return params_; }

 private:
  std::string name_;
  Params params_;
  std::function<double(double)> eval_;
};

/// phi(r) = 1 / Gamma(r + beta + 1). beta = 0 gives phi(r) = 1/r!.
inline CoefficientFn inverse_gamma_shift(double beta = 0.0) {
  return CoefficientFn("1/gamma(r+beta+1)", {{"beta", beta}},
                       [beta](double r) { return rgamma(r + beta + 1.0); });
}

/// phi(r) = 1 / r!.
inline CoefficientFn inverse_factorial() { return inverse_gamma_shift(0.0); }

/// phi(r) = 1, for which the pseudo-exponential is the ordinary exponential.
inline CoefficientFn constant_one() {
  return CoefficientFn("1", {}, [](double) { return 1.0; });
}

}  // namespace rmt
