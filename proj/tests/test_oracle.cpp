#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vacbrown/oracle.hpp"

using namespace vacbrown;
using namespace vacbrown::oracle;

TEST_CASE("one-dimensional reductions match the iterated double integrals") {
  for (double x : {0.5, 1.0}) {
    for (double ratio : {0.3, 1.2}) {
      const double t = ratio * x;
      for (auto k : {RawKernel::longitudinal, RawKernel::transverse}) {
        CHECK(velocity_integral(k, x, t).value == doctest::Approx(velocity_integral_2d(k, x, t).value).epsilon(1e-9));
        CHECK(position_integral(k, x, t).value == doctest::Approx(position_integral_2d(k, x, t).value).epsilon(1e-9));
      }
    }
  }
  CHECK_THROWS_AS(velocity_integral_2d(RawKernel::transverse, 1.0, 3.0), DomainError);
}

TEST_CASE("finite-part quadrature past the light cone reproduces the kernels") {
  const double x = 0.8;
  for (double t : {2.0, 4.0, 9.0}) {
    CHECK(velocity_integral(RawKernel::longitudinal, x, t).finite_part);
    CHECK(velocity_integral(RawKernel::longitudinal, x, t).value == doctest::Approx(kernels::f_long(x, t)).epsilon(1e-9));
    CHECK(velocity_integral(RawKernel::transverse, x, t).value == doctest::Approx(kernels::f_trans(x, t)).epsilon(1e-9));
    CHECK(position_integral(RawKernel::longitudinal, x, t).value == doctest::Approx(kernels::g_long(x, t)).epsilon(1e-9));
    CHECK(position_integral(RawKernel::transverse, x, t).value == doctest::Approx(kernels::g_trans(x, t)).epsilon(1e-9));
  }
}

TEST_CASE("finite part does not depend on the excised window") {
  QuadratureSpec narrow, wide;
  narrow.pv_excision = 0.05;
  wide.pv_excision = 0.45;
  const double a = velocity_integral(RawKernel::longitudinal, 1.0, 2.9, narrow).value;
  const double b = velocity_integral(RawKernel::longitudinal, 1.0, 2.9, wide).value;
  CHECK(a == doctest::Approx(b).epsilon(1e-10));
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(velocity_integral(RawKernel::transverse, 1.0, 2.0), SingularWindowError);
  CHECK_THROWS_AS(velocity_integral(RawKernel::transverse, 0.0, 1.0), DomainError);
  CHECK(velocity_integral(RawKernel::transverse, 1.0, 0.0).value == 0.0);
  QuadratureSpec bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("quadrature dispersion agrees with the closed-form partial sums") {
  const EvalPoint p(Geometry(1.0, 0.5), 0.3);
  for (auto kind : kAllKinds) {
    const double q = dispersion_via_quadrature(kind, p, 30).value;
    CHECK(q == doctest::Approx(dispersion_partial(kind, p, 30).value).epsilon(1e-10));
  }
}

TEST_CASE("adjudication report") {
  const auto r = adjudication_report();
  CHECK(r["version"].get<int>() == kReportVersion);
  CHECK(r["all_passed"].get<bool>());
  CHECK(r["kernel_certification"].size() == 48);
  for (const auto& c : r["conventions"]) CHECK(c["confirmed"].get<bool>());
}

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}
