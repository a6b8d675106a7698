#include <catch_amalgamated.hpp>

#include <cmath>
#include <functional>

#include <rmt/derivatives.hpp>
#include <rmt/finite_diff.hpp>

#include "oracles.hpp"

using oracle::rel_err;

namespace {

double bj0(double z) { return std::cyl_bessel_j(0.0, std::fabs(z)); }

double fd(const std::function<double(double)>& f, int n, double x) {
  auto d = rmt::finite_diff_oracle(f, n, x);
  REQUIRE(d.converged);
  return d.value;
}

}  // namespace

TEST_CASE("finite_diff_oracle examples", "[fd]") {
  CHECK(rel_err(fd([](double t) { return std::exp(t); }, 3, 0.0), 1.0) < 1e-8);
  CHECK(rel_err(fd([](double t) { return std::sin(t); }, 1, 0.0), 1.0) < 1e-10);
  CHECK(rel_err(fd([](double t) { return bj0(2.0 * t); }, 2, 0.7), rmt::d_n_j0(2, 0.7)) < 1e-6);
}

TEST_CASE("finite_diff_oracle on polynomials and exponentials", "[fd]") {
  for (int n = 0; n <= 8; ++n) {
    const double want = std::exp(0.4 * 1.3) * std::pow(0.4, n);
    CHECK(rel_err(fd([](double t) { return std::exp(0.4 * t); }, n, 1.3), want) < 1e-6);
  }
  CHECK(rel_err(fd([](double t) { return t * t * t * t; }, 4, 2.0), 24.0) < 1e-9);
  CHECK_THROWS_AS(rmt::finite_diff_oracle([](double t) { return t; }, 9, 0.0), rmt::DomainError);
}

TEST_CASE("hermite_gauss_deriv examples", "[deriv]") {
  for (double a : {0.5, 1.0})
    for (double x : {-0.4, 0.3, 1.1}) {
      CHECK(rel_err(rmt::hermite_gauss_deriv(0, a, x), std::exp(-a * x * x)) < 1e-15);
      CHECK(rel_err(rmt::hermite_gauss_deriv(1, a, x), 2 * a * x * std::exp(-a * x * x)) < 1e-15);
    }
  CHECK(rel_err(rmt::hermite_gauss_deriv(4, 1.0, 0.7), fd([](double t) { return std::exp(-t * t); }, 4, 0.7)) < 1e-6);
}

TEST_CASE("d_n_j0 examples", "[deriv]") {
  for (double x : {0.3, 0.7, 1.1, 4.0}) {
    CHECK(rel_err(rmt::d_n_j0(0, x), bj0(2.0 * x)) < 1e-15);
    CHECK(rel_err(rmt::d_n_j0(1, x), 2.0 * std::cyl_bessel_j(1.0, 2.0 * x)) < 1e-10);
  }
  CHECK(rel_err(rmt::d_n_j0(3, 0.7), -fd([](double t) { return bj0(2.0 * t); }, 3, 0.7)) < 1e-6);
  CHECK_THROWS_AS(rmt::d_n_j0(2, 0.0), rmt::DomainError);
}

TEST_CASE("d_n_exp_j0 examples", "[deriv]") {
  CHECK(rel_err(rmt::d_n_exp_j0(0, 0.5, 1.0, 0.9), std::exp(0.45) * bj0(1.8)) < 1e-15);
  // a = 0 reduces to d_n_j0 under x -> sqrt(b) x
  for (int n = 0; n <= 6; ++n)
    for (double b : {0.25, 1.0, 4.0}) {
      const double sb = std::sqrt(b);
      const double want = (n % 2 ? -1.0 : 1.0) * std::pow(sb, n) * rmt::d_n_j0(n, sb * 0.7);
      CHECK(std::fabs(rmt::d_n_exp_j0(n, 0.0, b, 0.7) - want) <= 1e-12 * std::fmax(1.0, std::fabs(want)));
    }
  auto f = [](double t) { return std::exp(0.5 * t) * bj0(2.0 * t); };
  CHECK(rel_err(rmt::d_n_exp_j0(2, 0.5, 1.0, 0.9), fd(f, 2, 0.9)) < 1e-6);
}

TEST_CASE("d_n_j0_j0 examples", "[deriv]") {
  CHECK(rel_err(rmt::d_n_j0_j0(0, 1.0, 0.25, 0.8), bj0(1.6) * bj0(0.8)) < 1e-15);
  auto f = [](double t) { return bj0(2.0 * t) * bj0(t); };
  CHECK(rel_err(rmt::d_n_j0_j0(2, 1.0, 0.25, 0.8), fd(f, 2, 0.8)) < 1e-6);
  for (int n = 0; n <= 6; ++n)
    for (double x : {0.3, 0.7, 1.1})
      CHECK(rel_err(rmt::d_n_j0_j0(n, 1.0, 0.25, x), rmt::d_n_j0_j0(n, 0.25, 1.0, x)) < 1e-12);
}

TEST_CASE("every derivative formula matches finite differences", "[deriv][property]") {
  for (int n = 0; n <= 6; ++n)
    for (double x : {0.3, 0.7, 1.1}) {
      const double sign = n % 2 ? -1.0 : 1.0;
      INFO("n=" << n << " x=" << x);
      CHECK(rel_err(rmt::d_n_j0(n, x), sign * fd([](double t) { return bj0(2.0 * t); }, n, x)) < 1e-6);
      for (double a : {0.5, 1.0}) {
        CHECK(rel_err(rmt::hermite_gauss_deriv(n, a, x), sign * fd([a](double t) { return std::exp(-a * t * t); }, n, x)) < 1e-6);
        for (double b : {0.25, 1.0}) {
          auto g = [a, b](double t) { return std::exp(a * t) * bj0(2.0 * std::sqrt(b) * t); };
          auto h = [a, b](double t) { return bj0(2.0 * std::sqrt(a) * t) * bj0(2.0 * std::sqrt(b) * t); };
          CHECK(rel_err(rmt::d_n_exp_j0(n, a, b, x), fd(g, n, x)) < 1e-6);
          CHECK(rel_err(rmt::d_n_j0_j0(n, a, b, x), fd(h, n, x)) < 1e-6);
        }
      }
    }
}

TEST_CASE("d_n_j0 composes under differentiation", "[deriv][property]") {
  for (int n = 1; n <= 6; ++n)
    for (double x : {0.5, 0.9}) {
      // (-1)^n d^n = -d/dx of (-1)^(n-1) d^(n-1)
      auto prev = [n](double t) { return rmt::d_n_j0(n - 1, t); };
      CHECK(rel_err(rmt::d_n_j0(n, x), -fd(prev, 1, x)) < 1e-5);
    }
}

TEST_CASE("hybrid generating function", "[deriv]") {
  for (double a : {-1.0, 0.5, 2.0})
    for (double x : {-0.8, 0.3, 1.0}) CHECK(rmt::hybrid_genfunc_residual(a, 0.0, x, 40) < 1e-10);
  CHECK(rmt::hybrid_genfunc_residual(1.0, 0.5, 0.5, 40) < 1e-8);
  CHECK(rmt::hybrid_genfunc_residual(0.0, 1.0, 0.5, 40) < 1e-8);
  for (double b : {-1.0, 0.7})
    for (double x : {-1.0, 0.4}) CHECK(rmt::hybrid_genfunc_residual(0.3, b, x, 40) < 1e-8);
}

TEST_CASE("hybrid generating function right side against an independent sum", "[deriv]") {
  // e^{ax} sum_r (b x^2)^r/(r!)^2, summed here directly
  const double a = 1.0, b = 0.5, x = 0.5;
  long double s = 0.0L, t = 1.0L;
  for (int r = 0; r < 40; ++r) {
    if (r > 0) t *= b * x * x / (static_cast<long double>(r) * r);
    s += t;
  }
  long double lhs = 0.0L, p = 1.0L;
  for (int n = 0; n <= 40; ++n) {
    if (n > 0) p *= x / n;
    lhs += p * rmt::poly_eval(rmt::PolyFamily::hybrid(), n, a, b);
  }
  CHECK(std::fabs(static_cast<double>(lhs - std::exp(a * x) * s)) < 1e-12);
}
