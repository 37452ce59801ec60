#include <cmath>
#include <doctest.h>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/scales.hpp"

using namespace casimir;

namespace {
constexpr double kRoomT = 300.0;
}

TEST_CASE("thermal frequency: value and linearity") {
    const double wT = thermal_frequency(kRoomT);
    // k_B * 300 / hbar
    CHECK(wT == doctest::Approx(constants::k_B * 300.0 / constants::hbar).epsilon(1e-15));
    // about 6.2 THz in nu = omega/2pi
    CHECK(wT / (2.0 * M_PI) == doctest::Approx(6.2e12).epsilon(0.02));
    CHECK(thermal_frequency(0.0) == 0.0);
    CHECK(thermal_frequency(600.0) == doctest::Approx(2.0 * wT).epsilon(1e-15));
    CHECK_THROWS_AS(thermal_frequency(-1.0), std::domain_error);
}

TEST_CASE("thermal wavelength: value, scaling, identity") {
    const double lam300 = thermal_wavelength(kRoomT);
    CHECK(lam300 == doctest::Approx(3.8e-6).epsilon(0.01));
    // lambda_T * omega_T = c/2 exactly
    CHECK(lam300 * thermal_frequency(kRoomT) ==
          doctest::Approx(constants::c_light / 2.0).epsilon(1e-15));
    CHECK(thermal_wavelength(150.0) == doctest::Approx(2.0 * lam300).epsilon(1e-14));
    // 75 K: evaluate the formula independently; also exactly 4x the 300 K value
    const double lam75 = constants::hbar * constants::c_light /
                         (2.0 * constants::k_B * 75.0);
    CHECK(thermal_wavelength(75.0) == doctest::Approx(lam75).epsilon(1e-15));
    CHECK(thermal_wavelength(75.0) == doctest::Approx(4.0 * lam300).epsilon(1e-14));
    CHECK(lam75 == doctest::Approx(15.27e-6).epsilon(0.01));
    CHECK_THROWS_AS(thermal_wavelength(0.0), std::domain_error);
}

TEST_CASE("bose occupation: limits and frozen values") {
    CHECK(bose_occupation(1e13, 0.0) == 0.0);
    // hbar omega = k_B T: n = 1/(e - 1)
    const double w_eq = constants::k_B * kRoomT / constants::hbar;
    CHECK(bose_occupation(w_eq, kRoomT) ==
          doctest::Approx(0.5819767068693265).epsilon(1e-12));
    // low-frequency enhancement ~ k_B T / hbar omega
    const double w_small = 0.01 * w_eq;
    CHECK(bose_occupation(w_small, kRoomT) == doctest::Approx(100.0).epsilon(0.01));
    // quantum cutoff used by the integrators
    CHECK(bose_occupation(40.0 * w_eq, kRoomT) < 1e-17);
    CHECK_THROWS_AS(bose_occupation(0.0, kRoomT), std::domain_error);
}

TEST_CASE("bose occupation: monotonicity") {
    const double w0 = thermal_frequency(kRoomT);
    double prev = bose_occupation(0.05 * w0, kRoomT);
    for (double f = 0.1; f < 10.0; f *= 1.5) {
        const double n = bose_occupation(f * w0, kRoomT);
        CHECK(n < prev);
        prev = n;
    }
    prev = bose_occupation(w0, 10.0);
    for (double T = 20.0; T < 2000.0; T *= 2.0) {
        const double n = bose_occupation(w0, T);
        CHECK(n > prev);
        prev = n;
    }
}

TEST_CASE("physical constants are mutually consistent") {
    const double c2 = constants::c_light * constants::c_light;
    CHECK(constants::mu0 * constants::eps0 * c2 == doctest::Approx(1.0).epsilon(1e-9));
}
