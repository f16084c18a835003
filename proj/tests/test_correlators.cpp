#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vacbrown/correlators.hpp"
#include "vacbrown/quantities.hpp"

using namespace vacbrown;

TEST_CASE("geometry invariants") {
  CHECK_THROWS_AS(Geometry(0.0, 0.1), DomainError);
  CHECK_THROWS_AS(Geometry(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(Geometry(1.0, 0.0), DomainError);
  const Geometry g(2.0, 0.5);
  CHECK(g.mirrored().z() == 1.5);
}

TEST_CASE("Minkowski two-point function") {
  const double v = minkowski_two_point(0, 0, 2.0, {1.0, 0.0, 0.0});
  CHECK(v == doctest::Approx(1.0 / (4.0 * kPi * kPi * 3.0)));
  CHECK(minkowski_two_point(1, 1, 2.0, {1.0, 0.0, 0.0}) == doctest::Approx(-v));
  CHECK(minkowski_two_point(1, 2, 2.0, {1.0, 0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(minkowski_two_point(0, 0, 1.0, {1.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(minkowski_two_point(4, 0, 2.0, {1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("coincident normal-normal photon function at the midpoint is 1/(12 a^2)") {
  for (double a : {1.0, 2.5}) {
    const Geometry g(a, 0.5 * a);
    const auto d = renormalized_photon_two_point(3, 3, 0.0, 0.0, 0.0, 0.5 * a, 0.5 * a, g);
    CHECK(d.value == doctest::Approx(1.0 / (12.0 * a * a)).epsilon(1e-12));
    CHECK(d.tail_estimate <= 1e-12 * std::abs(d.value));
  }
}

TEST_CASE("photon function symmetries") {
  const Geometry g(1.0, 0.3);
  const auto d12 = renormalized_photon_two_point(1, 1, 0.2, 0.1, 0.0, 0.3, 0.6, g);
  const auto d21 = renormalized_photon_two_point(1, 1, -0.2, -0.1, 0.0, 0.6, 0.3, g);
  CHECK(d12.value == doctest::Approx(d21.value).epsilon(1e-12));
  CHECK(renormalized_photon_two_point(1, 2, 0.2, 0.1, 0.0, 0.3, 0.6, g).value == 0.0);
  CHECK_THROWS_AS(renormalized_photon_two_point(0, 0, 0.2, 0.0, 0.0, 1.3, 0.6, g), DomainError);
  // dt = z + z' puts the n = 0 reflected image on its light cone.
  CHECK_THROWS_AS(renormalized_photon_two_point(0, 0, 0.9, 0.0, 0.0, 0.3, 0.6, g), SingularWindowError);
}

TEST_CASE("equal-point field correlators at dt = 0") {
  const Geometry mid(1.0, 0.5);
  CHECK(exx_renormalized(0.0, mid).value == doctest::Approx(7.0 * kPi * kPi / 360.0).epsilon(1e-12));
  CHECK(ezz_renormalized(0.0, mid).value == doctest::Approx(kPi * kPi / 45.0).epsilon(1e-12));
}

TEST_CASE("field correlators are mirror symmetric and even in dt") {
  const Geometry g(1.0, 0.23);
  for (double dt : {0.1, 0.7, 3.3}) {
    CHECK(exx_renormalized(dt, g).value == doctest::Approx(exx_renormalized(dt, g.mirrored()).value).epsilon(1e-12));
    CHECK(ezz_renormalized(dt, g).value == doctest::Approx(ezz_renormalized(-dt, g).value).epsilon(1e-14));
  }
  CHECK_THROWS_AS(ezz_renormalized(0.46, g), SingularWindowError);
}

TEST_CASE("single-plate limit of the field correlators") {
  // K(z, 0) dominates when a >> z: E_z E_z -> 1/(16 pi^2 z^4), E_x E_x -> 1/(16 pi^2 z^4).
  const Geometry g(1e4, 1.0);
  CHECK(ezz_renormalized(0.0, g).value == doctest::Approx(1.0 / (16.0 * kPi * kPi)).epsilon(1e-10));
  CHECK(exx_renormalized(0.0, g).value == doctest::Approx(1.0 / (16.0 * kPi * kPi)).epsilon(1e-10));
}
