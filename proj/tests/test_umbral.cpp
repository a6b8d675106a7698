#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <rmt/expr.hpp>
#include <rmt/umbral.hpp>

#include "oracles.hpp"

using oracle::rel_err;
using rmt::Convergence;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

// sum_r sum_s (k x)^r (-k/2)^s / (r! s! Gamma(2s + r + 1)) in long double
double weyl_oracle(double x, double k) {
  long double total = 0.0L;
  long double pr = 1.0L;  // (k x)^r / r!
  for (int r = 0; r < 60; ++r) {
    if (r > 0) pr *= static_cast<long double>(k) * x / r;
    long double ps = 1.0L;  // (-k/2)^s / s!
    for (int s = 0; s < 60; ++s) {
      if (s > 0) ps *= -0.5L * k / s;
      total += pr * ps / std::tgamma(2.0L * s + r + 1.0L);
    }
  }
  return static_cast<double>(total);
}

}  // namespace

TEST_CASE("pseudo_exp examples", "[umbral]") {
  for (double x : {0.0, 0.3, 1.0, 4.0}) {
    auto e = rmt::pseudo_exp(rmt::constant_one(), x);
    CHECK(e.classification == Convergence::Convergent);
    CHECK(rel_err(e.value, std::exp(-x)) < 1e-13);

    for (double alpha : {0.0, 0.5, 2.0})
      CHECK(rel_err(rmt::pseudo_exp(rmt::inverse_gamma_shift(alpha), x).value,
                    oracle::tricomi(alpha, x)) < 1e-12);

    CHECK(std::fabs(rmt::pseudo_exp(rmt::inverse_factorial(), x, 2).value -
                    oracle::bessel_j_series(0.0, 2.0 * x)) < 1e-13);
  }
}

TEST_CASE("pseudo_exp of x^m equals pseudo_exp at x^m", "[umbral][property]") {
  auto phi = rmt::parse_phi("rgamma(r+beta+1)*exp(-r/3)", {{"beta", 0.5}});
  for (int m = 1; m <= 4; ++m)
    for (double x : {0.2, 0.7, 1.3, 2.0}) {
      const double lhs = rmt::pseudo_exp(phi, x, m).value;
      const double rhs = rmt::pseudo_exp(phi, std::pow(x, m), 1).value;
      CHECK(std::fabs(lhs - rhs) <= 1e-13 * std::fmax(1.0, std::fabs(rhs)));
    }
}

TEST_CASE("rmt_mellin examples", "[umbral]") {
  for (double alpha : {0.0, 1.0, 2.0})
    for (double nu : {0.25, 0.5, 0.75, 1.0})
      CHECK(rel_err(rmt::rmt_mellin(rmt::inverse_gamma_shift(alpha), nu),
                    std::tgamma(nu) / std::tgamma(alpha - nu + 1.0)) < 1e-14);
  for (double nu : {0.3, 1.0, 2.5, 7.0})
    CHECK(rel_err(rmt::rmt_mellin(rmt::constant_one(), nu), std::tgamma(nu)) < 1e-14);
  CHECK(rel_err(rmt::rmt_mellin(rmt::inverse_factorial(), 0.5), 1.0) < 1e-15);
  CHECK(rel_err(rmt::rmt_mellin(rmt::parse_phi("1/gamma(r+2)"), 0.5), 2.0) < 1e-15);
}

TEST_CASE("rmt_mellin with exponent m and weight k", "[umbral]") {
  // phi = 1, m = 2: int_0^inf x^(nu-k) exp(-x^2) dx = Gamma((nu+1-k)/2) / 2
  for (double nu : {0.5, 1.0, 2.5})
    for (double k : {0.0, 1.0}) {
      const double s = nu + 1.0 - k;
      const double want = oracle::mellin_trapezoid(s, [](double x) { return std::exp(-x * x); });
      const double got = rmt::rmt_mellin(rmt::constant_one(), nu, 2, k);
      CHECK(rel_err(got, std::tgamma(0.5 * s) / 2.0) < 1e-14);
      CHECK(rel_err(got, want) < 1e-12);
    }
}

TEST_CASE("rmt_mellin rejects poles and non-integrable exponents", "[umbral]") {
  CHECK_THROWS_AS(rmt::rmt_mellin(rmt::constant_one(), 0.0), rmt::PoleError);
  CHECK_THROWS_AS(rmt::rmt_mellin(rmt::constant_one(), -2.0), rmt::PoleError);
  CHECK_THROWS_AS(rmt::rmt_mellin(rmt::constant_one(), -0.5), rmt::DomainError);
  CHECK_THROWS_AS(rmt::rmt_mellin(rmt::constant_one(), 1.0, 0), rmt::DomainError);
}

TEST_CASE("pseudo_gauss closed form for 1/r!", "[umbral]") {
  for (double b : {0.0, 0.5, 1.0, 1.5, 1.9}) {
    auto s = rmt::pseudo_gauss(rmt::inverse_factorial(), b);
    CHECK(s.trusted());
    CHECK(rel_err(s.value, 2.0 / std::sqrt(4.0 + b * b)) < 1e-10);
  }
  CHECK(std::fabs(rmt::pseudo_gauss(rmt::inverse_factorial(), 1.0).value - 0.894427191) < 1e-9);
}

TEST_CASE("pseudo_gauss at b = 0 keeps only phi(-1/2)", "[umbral]") {
  auto phi = rmt::parse_phi("exp(r)+r^2");
  CHECK(rel_err(rmt::pseudo_gauss(phi, 0.0).value, kSqrtPi * phi(-0.5)) < 1e-15);
}

TEST_CASE("pseudo_gauss with phi = 1 is the ordinary Gaussian integral", "[umbral]") {
  for (double b : {0.0, 0.7, 2.0}) {
    const double want = oracle::simpson([b](double x) { return std::exp(b * x - x * x); }, -20.0, 20.0, 20000);
    CHECK(rel_err(rmt::pseudo_gauss(rmt::constant_one(), b).value, want) < 1e-12);
  }
}

TEST_CASE("pseudo_gauss is even in b", "[umbral][property]") {
  auto phi = rmt::inverse_gamma_shift(0.5);
  for (double b : {0.1, 0.8, 1.7})
    CHECK(rmt::pseudo_gauss(phi, b).value == rmt::pseudo_gauss(phi, -b).value);
}

TEST_CASE("product_integral examples", "[umbral]") {
  auto inv = rmt::inverse_factorial();
  CHECK(rel_err(rmt::product_integral(inv, inv, 1.0, 1.0).value, 0.9384698072) < 1e-10);
  for (auto [a, b] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {0.5, 1.0}, {3.0, 1.0}})
    CHECK(rel_err(rmt::product_integral(inv, inv, a, b).value,
                  oracle::bessel_j_series(0.0, a / (2.0 * b)) / b) < 1e-10);

  auto phi = rmt::parse_phi("exp(-r)");
  auto sigma = rmt::inverse_gamma_shift(1.0);
  for (double b : {-2.0, 0.5, 3.0})
    CHECK(rel_err(rmt::product_integral(phi, sigma, 0.0, b).value,
                  kSqrtPi / std::fabs(b) * phi(0.0) * sigma(-0.5)) < 1e-15);
  CHECK_THROWS_AS(rmt::product_integral(inv, inv, 1.0, 0.0), rmt::DomainError);
}

TEST_CASE("product_integral depends on a/b up to the 1/|b| prefactor", "[umbral][property]") {
  auto inv = rmt::inverse_factorial();
  auto sigma = rmt::inverse_gamma_shift(0.5);
  for (double lambda : {0.5, 2.0, 3.0})
    for (auto [a, b] : {std::pair{1.0, 1.0}, {0.3, 2.0}}) {
      const double base = rmt::product_integral(inv, sigma, a, b).value;
      const double scaled = rmt::product_integral(inv, sigma, lambda * a, lambda * b).value;
      CHECK(rel_err(scaled * lambda, base) < 1e-14);
    }
}

TEST_CASE("weyl_pseudo_exp examples", "[umbral]") {
  for (double x : {-1.5, 0.0, 2.0}) CHECK(rmt::weyl_pseudo_exp(x, 0.0).value == 1.0);
  for (double k : {-2.0, 0.5, 2.0})
    CHECK(rel_err(rmt::weyl_pseudo_exp(0.0, k).value, rmt::bessel_wright(0.0, 2.0, -0.5 * k)) < 1e-15);
  CHECK(rel_err(rmt::weyl_pseudo_exp(1.0, 1.0).value, weyl_oracle(1.0, 1.0)) < 1e-12);
}

TEST_CASE("weyl_pseudo_exp single sum matches the double sum", "[umbral][property]") {
  for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0})
    for (double k : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      auto s = rmt::weyl_pseudo_exp(x, k);
      REQUIRE(s.trusted());
      const double want = weyl_oracle(x, k);
      CHECK(std::fabs(s.value - want) <= 1e-12 * std::fmax(1.0, std::fabs(want)));
    }
}

TEST_CASE("Mellin of the Tricomi family through pseudo_exp, absolutely convergent range", "[umbral]") {
  // nu < alpha/2 + 1/4 makes the integral absolutely convergent; check with
  // a brute-force Simpson rule on a long, finely sampled range in u = 2 sqrt(x).
  const double alpha = 2.0, nu = 0.5;
  auto phi = rmt::inverse_gamma_shift(alpha);
  auto integrand = [&](double u) {
    const double x = 0.25 * u * u;
    return u == 0.0 ? 0.0 : std::pow(x, nu - 1.0) * oracle::bessel_j_series(alpha, u) * std::pow(x, -0.5 * alpha) * 0.5 * u;
  };
  const double head = oracle::simpson(integrand, 0.0, 30.0, 30000);
  CHECK(std::fabs(head - rmt::rmt_mellin(phi, nu)) < 2e-3);
}
