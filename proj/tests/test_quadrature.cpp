#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bergtop/errors.hpp"
#include "bergtop/quadrature.hpp"

using bergtop::BudgetExceeded;
namespace quadrature = bergtop::quadrature;

TEST_CASE("polynomials and classic integrals") {
  const auto sq = [](double x) { return x * x; };
  const auto r1 = quadrature::integrate(sq, 0.0, 1.0, 1e-12, 0.0, 100);
  CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const auto r2 = quadrature::integrate([](double x) { return std::sin(x); }, 0.0,
                                        std::numbers::pi, 1e-12, 0.0, 1000);
  CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-13));

  // Slowly decaying smooth integrand over a long range.
  const auto r3 = quadrature::integrate([](double x) { return std::exp(-x) * std::cos(x); }, 0.0,
                                        40.0, 1e-12, 0.0, 100000);
  CHECK(r3.value == doctest::Approx(0.5).epsilon(1e-11));
}

TEST_CASE("error estimate covers the true error") {
  const auto f = [](double x) { return std::sqrt(x); };  // endpoint singularity in derivative
  const auto r = quadrature::integrate(f, 0.0, 1.0, 1e-10, 0.0, 100000);
  CHECK(std::fabs(r.value - 2.0 / 3.0) <= r.abs_error + 1e-15);
}

TEST_CASE("budget exhaustion raises") {
  const auto nasty = [](double x) { return std::sqrt(std::fabs(x - 0.337)); };
  CHECK_THROWS_AS(quadrature::integrate(nasty, 0.0, 1.0, 1e-14, 0.0, 3), BudgetExceeded);
}

TEST_CASE("deterministic: identical runs produce identical bits") {
  const auto f = [](double x) { return std::exp(-x * x) * std::sin(7 * x + 0.3); };
  const auto a = quadrature::integrate(f, -3.0, 5.0, 1e-12, 0.0, 100000);
  const auto b = quadrature::integrate(f, -3.0, 5.0, 1e-12, 0.0, 100000);
  CHECK(a.value == b.value);
  CHECK(a.abs_error == b.abs_error);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("argument validation") {
  const auto f = [](double x) { return x; };
  CHECK_THROWS_AS(quadrature::integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-6,
                                        0.0, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(quadrature::integrate(f, 0.0, 1.0, 0.0, 0.0, 10), std::invalid_argument);
  const auto empty = quadrature::integrate(f, 2.0, 2.0, 1e-6, 0.0, 10);
  CHECK(empty.value == 0.0);
}
