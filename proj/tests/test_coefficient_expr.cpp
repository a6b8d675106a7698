#include <catch_amalgamated.hpp>

#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <rmt/coefficient.hpp>
#include <rmt/expr.hpp>

using Catch::Matchers::WithinRel;

TEST_CASE("coefficient functional rejects phi(0) == 0", "[coefficient]") {
  CHECK_THROWS_AS(rmt::CoefficientFn("zero", {}, [](double r) { return r; }), rmt::DomainError);
  CHECK_THROWS_AS(rmt::inverse_gamma_shift(-1.0), rmt::DomainError);
}

TEST_CASE("built-in coefficient functionals", "[coefficient]") {
  auto inv = rmt::inverse_factorial();
  CHECK(inv(0.0) == 1.0);
  CHECK_THAT(inv(3.0), WithinRel(1.0 / 6.0, 1e-15));
  CHECK(inv(-1.0) == 0.0);
  CHECK_THAT(inv(-0.5), WithinRel(1.0 / std::sqrt(std::numbers::pi), 1e-15));

  auto shifted = rmt::inverse_gamma_shift(1.5);
  CHECK(shifted.params().at("beta") == 1.5);
  CHECK_THAT(shifted(0.5), WithinRel(0.5, 1e-15));  // 1/Gamma(3)

  auto one = rmt::constant_one();
  CHECK(one(-7.25) == 1.0);
}

TEST_CASE("parse_phi examples", "[expr]") {
  auto phi = rmt::parse_phi("1/gamma(r+1)");
  CHECK(phi(0.0) == 1.0);
  CHECK_THAT(phi(-0.5), WithinRel(1.0 / std::tgamma(0.5), 1e-15));

  auto shifted = rmt::parse_phi("1/gamma(r+alpha+1)", {{"alpha", 1.0}});
  CHECK_THAT(shifted(2.0), WithinRel(1.0 / 6.0, 1e-15));

  try {
    rmt::parse_phi("1/gamma(q+1)");
    FAIL("expected an unbound identifier error");
  } catch (const rmt::UnboundIdentifierError& e) {
    CHECK(e.name() == "q");
    CHECK(e.position() == 8);
  }
}

TEST_CASE("operator precedence and associativity", "[expr]") {
  auto at = [](const char* src, double r = 0.0) { return rmt::eval_expr(*rmt::parse_expr(src), r, {}); };
  CHECK(at("1+2*3") == 7.0);
  CHECK(at("(1+2)*3") == 9.0);
  CHECK(at("2^3^2") == 512.0);
  CHECK(at("-2^2") == -4.0);
  CHECK(at("2^-1") == 0.5);
  CHECK(at("8/2/2") == 2.0);
  CHECK(at("5-2-1") == 2.0);
  CHECK(at("--3") == 3.0);
  CHECK(at(" r * .5e1 ", 2.0) == 10.0);
  CHECK(at("fact(3)") == 6.0);
  CHECK(at("rgamma(0)") == 0.0);
  CHECK(at("sqrt(16)+exp(0)") == 5.0);
}

TEST_CASE("syntax errors carry positions", "[expr]") {
  auto position_of = [](const char* src) -> std::size_t {
    try {
      rmt::parse_expr(src);
    } catch (const rmt::ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("1+") == 2);
  CHECK(position_of("(1+2") == 4);
  CHECK(position_of("1 $ 2") == 2);
  CHECK(position_of("2 3") == 2);
  CHECK(position_of("foo(1)") == 0);
}

TEST_CASE("arity errors", "[expr]") {
  CHECK_THROWS_AS(rmt::parse_expr("gamma()"), rmt::ArityError);
  CHECK_THROWS_AS(rmt::parse_expr("exp(1,2)"), rmt::ArityError);
}

TEST_CASE("evaluation signals poles and domain errors", "[expr]") {
  auto phi = rmt::parse_phi("1/gamma(r+1)");
  CHECK_THROWS_AS(phi(-1.0), rmt::PoleError);
  auto safe = rmt::parse_phi("rgamma(r+1)");
  CHECK(safe(-1.0) == 0.0);
  CHECK_THROWS_AS(rmt::parse_phi("1+sqrt(r)")(-1.0), rmt::DomainError);
  CHECK_THROWS_AS(rmt::parse_phi("1+(0-2)^r")(0.5), rmt::DomainError);
  CHECK_THROWS_AS(rmt::parse_phi("1/r")(0.0), rmt::PoleError);
}

namespace {

std::string random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 6);
  static const char* fns[] = {"gamma", "rgamma", "fact", "exp", "sqrt"};
  static const char ops[] = {'+', '-', '*', '/', '^'};
  switch (pick(rng)) {
    case 0: {
      std::uniform_real_distribution<double> v(0.0, 50.0);
      char buf[64];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v(rng));
      return std::string(buf, end);
    }
    case 1: return "r";
    case 2: return std::uniform_int_distribution<int>(0, 1)(rng) ? "alpha" : "beta_2";
    case 3: return "-" + random_expr(rng, depth - 1);
    case 4: return std::string(fns[std::uniform_int_distribution<int>(0, 4)(rng)]) + "(" +
                   random_expr(rng, depth - 1) + ")";
    default: {
      const char op = ops[std::uniform_int_distribution<int>(0, 4)(rng)];
      return "(" + random_expr(rng, depth - 1) + ")" + op + random_expr(rng, depth - 1);
    }
  }
}

}  // namespace

TEST_CASE("pretty-print round trip preserves structure", "[expr][property]") {
  const rmt::CoefficientFn::Params params{{"alpha", 0.5}, {"beta_2", 2.0}};
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const std::string src = random_expr(rng, 5);
    auto ast = rmt::parse_expr(src, params);
    const std::string printed = rmt::to_string(*ast);
    auto again = rmt::parse_expr(printed, params);
    INFO(src << "  ->  " << printed);
    CHECK(rmt::same_structure(*ast, *again));
    CHECK(rmt::to_string(*again) == printed);
  }
}

TEST_CASE("same_structure distinguishes trees", "[expr]") {
  CHECK_FALSE(rmt::same_structure(*rmt::parse_expr("1+r"), *rmt::parse_expr("r+1")));
  CHECK_FALSE(rmt::same_structure(*rmt::parse_expr("gamma(r)"), *rmt::parse_expr("fact(r)")));
  CHECK(rmt::same_structure(*rmt::parse_expr("1+2*r"), *rmt::parse_expr("(1+(2*r))")));
}
