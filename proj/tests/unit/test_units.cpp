#include <doctest.h>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/units.hpp"

using namespace casimir;

TEST_CASE("length, temperature, time, frequency parsing") {
    CHECK(parse_quantity("150nm", Quantity::Length) == doctest::Approx(1.5e-7));
    CHECK(parse_quantity("1um", Quantity::Length) == doctest::Approx(1e-6));
    CHECK(parse_quantity("0.5mm", Quantity::Length) == doctest::Approx(5e-4));
    CHECK(parse_quantity("2m", Quantity::Length) == doctest::Approx(2.0));
    CHECK(parse_quantity("300K", Quantity::Temperature) == doctest::Approx(300.0));
    CHECK(parse_quantity("27fs", Quantity::Time) == doctest::Approx(2.7e-14));
    CHECK(parse_quantity("1e-12s", Quantity::Time) == doctest::Approx(1e-12));
    CHECK(parse_quantity("6.2THz", Quantity::Frequency) == doctest::Approx(6.2e12));
    CHECK(parse_quantity(" 10 Hz ", Quantity::Frequency) == doctest::Approx(10.0));
}

TEST_CASE("plasma energies convert via E/hbar") {
    const double wp = parse_quantity("9eV", Quantity::PlasmaEnergy);
    CHECK(wp == doctest::Approx(9.0 * constants::eV / constants::hbar).epsilon(1e-14));
    // consistency: c/omega_p is the 22 nm penetration depth
    CHECK(constants::c_light / wp == doctest::Approx(22e-9).epsilon(0.02));
    CHECK(parse_quantity("9000meV", Quantity::PlasmaEnergy) ==
          doctest::Approx(wp).epsilon(1e-14));
}

TEST_CASE("rejects bare numbers, bad units, junk") {
    CHECK_THROWS_AS(parse_quantity("5", Quantity::Length), parse_error);
    CHECK_THROWS_AS(parse_quantity("5parsec", Quantity::Length), parse_error);
    CHECK_THROWS_AS(parse_quantity("", Quantity::Length), parse_error);
    CHECK_THROWS_AS(parse_quantity("nm", Quantity::Length), parse_error);
    CHECK_THROWS_AS(parse_quantity("3K", Quantity::Length), parse_error);
    CHECK_THROWS_AS(parse_quantity("1eV", Quantity::Frequency), parse_error);
}
