#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vacbrown/errors.hpp"
#include "vacbrown/quantities.hpp"

using namespace vacbrown;

TEST_CASE("electron parameters") {
  const auto e = ParticleParams::electron();
  CHECK(e.charge_squared == doctest::Approx(4.0 * kPi * codata::alpha).epsilon(1e-15));
  CHECK(e.natural_length_m() == doctest::Approx(codata::electron_reduced_compton_m).epsilon(1e-9));
  CHECK(e.natural_time_s() * codata::c_m_per_s == doctest::Approx(e.natural_length_m()).epsilon(1e-9));
  REQUIRE(particle_by_name("electron"));
  CHECK(particle_by_name("electron")->mass_eV == e.mass_eV);
  CHECK_FALSE(particle_by_name("muonium"));
}

TEST_CASE("invalid particles are rejected") {
  CHECK_THROWS_AS(validate(ParticleParams{0.0, 1.0, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(validate(ParticleParams::from_alpha(codata::alpha, -1.0)), DomainError);
}

TEST_CASE("unit conversions round trip") {
  const auto e = ParticleParams::electron();
  for (double x : {1e-10, 1e-6, 3.5e-2}) {
    CHECK(natural_to_length(length_to_natural(x, e), e) == doctest::Approx(x).epsilon(1e-14));
    CHECK(natural_to_time(time_to_natural(x, e), e) == doctest::Approx(x).epsilon(1e-14));
  }
  CHECK(length_to_natural(e.natural_length_m(), e) == doctest::Approx(1.0));
  CHECK_THROWS_AS(length_to_natural(0.0, e), DomainError);
  CHECK_THROWS_AS(time_to_natural(-1.0, e), DomainError);
}

TEST_CASE("dispersion kind names") {
  for (auto k : kAllKinds) {
    const auto parsed = parse_kind(to_string(k));
    REQUIRE(parsed);
    CHECK(*parsed == k);
  }
  CHECK(to_string(kNormalVelocity) == "dv2-normal");
  CHECK_FALSE(parse_kind("dv2-sideways"));
}

TEST_CASE("physicalize applies e^2/pi^2 and converts units") {
  const auto e = ParticleParams::electron();
  const auto u = UnitSystem::for_particle(e);
  const double pref = e.charge_squared / (kPi * kPi);
  CHECK(dispersion_prefactor(e) == doctest::Approx(pref));

  const auto vn = physicalize(2.0, kNormalVelocity, e, u, OutputUnits::natural);
  CHECK(vn.value == doctest::Approx(2.0 * pref));
  CHECK(vn.unit == "c^2");
  const auto vs = physicalize(2.0, kNormalVelocity, e, u, OutputUnits::si);
  CHECK(vs.value == doctest::Approx(2.0 * pref * codata::c_m_per_s * codata::c_m_per_s));
  CHECK(vs.unit == "m^2/s^2");

  const auto xs = physicalize(3.0, kParallelPosition, e, u, OutputUnits::si);
  const double l = e.natural_length_m();
  CHECK(xs.value == doctest::Approx(3.0 * pref * l * l));
  CHECK(xs.unit == "m^2");
}
