#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vacbrown/errors.hpp"
#include "vacbrown/quadrature.hpp"

using namespace vacbrown;
using namespace vacbrown::quad;

TEST_CASE("smooth integrals") {
  const auto r = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.error < 1e-11);
  CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0).value ==
        doctest::Approx(std::expm1(1.0)).epsilon(1e-14));
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
}

TEST_CASE("endpoint singularities converge adaptively") {
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-10, 1e-10, 4000});
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("failure to converge is reported") {
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-15, 1e-15, 3}),
                  QuadratureError);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, INFINITY), DomainError);
}

TEST_CASE("series arithmetic") {
  const Series s = Series::variable(10, 0.0);  // s
  const Series one(10, 1.0);
  const Series geo = one / (one - s);
  for (std::size_t i = 0; i <= 10; ++i) CHECK(geo[i] == doctest::Approx(1.0));
  const Series sq = (one + s) * (one + s);
  CHECK(sq[0] == 1.0);
  CHECK(sq[1] == 2.0);
  CHECK(sq[2] == 1.0);
  CHECK(sq[3] == 0.0);
  CHECK_THROWS_AS(one / s, DomainError);
}

TEST_CASE("Hadamard finite parts") {
  Series psi(20, 1.0);
  // FP int_{-1}^{2} dw / w^2 = -1/2 - 1
  CHECK(finite_part(psi, 3.0, 2, 2.0, 5.0) == doctest::Approx(-1.5));
  // PV int_{-1}^{2} dw / w = ln 2
  CHECK(finite_part(psi, 3.0, 1, 2.0, 5.0) == doctest::Approx(std::log(2.0)));
  // Regular integrand: int_{-1}^{2} (1 + w) dw = 3 + 3/2
  psi[1] = 1.0;
  CHECK(finite_part(psi, 3.0, 0, 2.0, 5.0) == doctest::Approx(4.5));
  CHECK_THROWS_AS(finite_part(psi, 3.0, 1, 3.5, 5.0), DomainError);
}
