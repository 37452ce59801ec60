#include <cmath>
#include <doctest.h>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"

using namespace casimir;

namespace {

const MaterialModel ideal = MaterialModel::perfect_conductor();
const MaterialModel gold = MaterialModel::gold();
const MaterialModel vac = MaterialModel::vacuum();
const double hbar = constants::hbar;
const double kB = constants::k_B;
const double c = constants::c_light;
const double zeta3 = constants::zeta3;

// ---------------------------------------------------------------------
// independent oracle: raw Matsubara sum with trapezoid k-integration for
// ideal mirrors; no variable transform, no Gauss rules, no engine code.
// ---------------------------------------------------------------------
double trapezoid_pressure_ideal(double d, double T) {
    const double xi1 = 2.0 * M_PI * kB * T / hbar;
    double total = 0.0;
    for (long n = 0;; ++n) {
        const double xi = n * xi1;
        if (2.0 * xi * d / c > 45.0 && n > 0) break;
        const double k_max = 45.0 / (2.0 * d);
        const long steps = 20000;
        const double h = k_max / steps;
        double sum = 0.0;
        for (long i = 0; i <= steps; ++i) {
            const double k = i * h;
            const double q = std::sqrt(xi * xi / (c * c) + k * k);
            const double e = std::exp(-2.0 * q * d);
            // r1 r2 = 1 for both polarizations
            double f = 0.0;
            if (q > 0.0) f = k * q * 2.0 * e / (1.0 - e);
            if (i == 0 || i == steps) f *= 0.5;
            sum += f;
        }
        total += (n == 0 ? 0.5 : 1.0) * sum * h;
    }
    return -(kB * T / M_PI) * total;
}

double retarded_pressure(double d) {
    return -M_PI * M_PI * hbar * c / (240.0 * d * d * d * d);
}
double thermal_pressure(double d, double T) {
    return -zeta3 * kB * T / (4.0 * M_PI * d * d * d);
}
double thermal_free_energy(double d, double T) {
    return -zeta3 * kB * T / (8.0 * M_PI * d * d);
}

} // namespace

TEST_CASE("matsubara frequencies") {
    CHECK(matsubara_xi(300.0, 0) == 0.0);
    const double xi1 = matsubara_xi(300.0, 1);
    CHECK(xi1 == doctest::Approx(2.0 * M_PI * kB * 300.0 / hbar).epsilon(1e-15));
    CHECK(xi1 == doctest::Approx(2.47e14).epsilon(0.005));
    CHECK(matsubara_xi(300.0, 7) == doctest::Approx(7.0 * xi1).epsilon(1e-15));
    CHECK_THROWS_AS(matsubara_xi(0.0, 1), std::domain_error);
    CHECK_THROWS_AS(matsubara_xi(300.0, -1), std::domain_error);
}

TEST_CASE("ideal mirrors at 1 um, 300 K match the trapezoid oracle to 0.1%") {
    const PlateSystem sys(ideal, ideal, 1e-6);
    const PressureBreakdown p = pressure(sys, 300.0);
    const double oracle = trapezoid_pressure_ideal(1e-6, 300.0);
    CHECK(p.total == doctest::Approx(oracle).epsilon(1e-3));
    CHECK(p.total < 0.0);
    // TE and TM contribute equally for ideal mirrors
    CHECK(p.by_polarization.te == doctest::Approx(p.by_polarization.tm).epsilon(1e-12));
}

TEST_CASE("zero-temperature ideal mirrors: the -pi^2 hbar c/240 d^4 law") {
    for (double d : {0.5e-6, 1e-6, 4e-6}) {
        const PlateSystem sys(ideal, ideal, d);
        const PressureBreakdown p = pressure_zero_temperature(sys);
        CHECK(p.total == doctest::Approx(retarded_pressure(d)).epsilon(1e-6));
    }
    // the quoted -1.3 mPa at 1 um
    const PlateSystem sys(ideal, ideal, 1e-6);
    CHECK(pressure_zero_temperature(sys).total ==
          doctest::Approx(-1.3e-3).epsilon(0.005));
    // free energy counterpart
    const FreeEnergyResult f = free_energy_zero_temperature(sys);
    CHECK(f.value ==
          doctest::Approx(-M_PI * M_PI * hbar * c / (720.0 * 1e-18)).epsilon(1e-6));
}

TEST_CASE("high-temperature asymptote at d = 5 lambda_T") {
    const double lamT = hbar * c / (2.0 * kB * 300.0);
    const double d = 5.0 * lamT;
    const PlateSystem sys(ideal, ideal, d);
    CHECK(pressure(sys, 300.0).total ==
          doctest::Approx(thermal_pressure(d, 300.0)).epsilon(1e-4));
    CHECK(free_energy_area(sys, 300.0).value ==
          doctest::Approx(thermal_free_energy(d, 300.0)).epsilon(1e-4));
}

TEST_CASE("vacuum plates produce exactly zero") {
    const PlateSystem sys(vac, ideal, 1e-6);
    const PressureBreakdown p = pressure(sys, 300.0);
    CHECK(p.total == 0.0);
    CHECK(p.by_polarization.te == 0.0);
    CHECK(free_energy_area(sys, 300.0).value == 0.0);
    CHECK(pressure_zero_temperature(sys).total == 0.0);
}

TEST_CASE("gold at large separation carries half the ideal free energy") {
    const double d = 30e-6;
    const FreeEnergyResult f_gold = free_energy_area(PlateSystem(gold, gold, d), 300.0);
    const FreeEnergyResult f_ideal = free_energy_area(PlateSystem(ideal, ideal, d), 300.0);
    CHECK(f_gold.value / f_ideal.value == doctest::Approx(0.5).epsilon(0.02));
    // the missing piece is exactly the static TE term
    CHECK(f_gold.n0.te == 0.0);
    CHECK(f_ideal.n0.te < 0.0);
    // same ratio against the lossless plasma, which is ideal-like out here
    const MaterialModel pg = MaterialModel::plasma(gold.omega_p());
    const FreeEnergyResult f_plasma = free_energy_area(PlateSystem(pg, pg, d), 300.0);
    const double ratio = f_gold.value / f_plasma.value;
    CHECK(ratio >= 0.49);
    CHECK(ratio <= 0.51);
}

TEST_CASE("mixed plates: bounded by the symmetric pairs, static TE killed") {
    const double d = 500e-9;
    const double p_gold = pressure(PlateSystem(gold, gold, d), 300.0).total;
    const double p_ideal = pressure(PlateSystem(ideal, ideal, d), 300.0).total;
    const PressureBreakdown p_mixed = pressure(PlateSystem(ideal, gold, d), 300.0);
    CHECK(p_mixed.total < 0.0);
    CHECK(std::abs(p_mixed.total) > std::abs(p_gold));
    CHECK(std::abs(p_mixed.total) < std::abs(p_ideal));
    // one Drude plate suffices to remove the static TE term
    CHECK(p_mixed.n0.te == 0.0);
    CHECK(p_mixed.n0.tm < 0.0);
    // plate order is immaterial
    const PressureBreakdown p_swap = pressure(PlateSystem(gold, ideal, d), 300.0);
    CHECK(p_swap.total == doctest::Approx(p_mixed.total).epsilon(1e-13));
}

TEST_CASE("nonretarded regime: free energy scales as 1/d^2") {
    const MaterialModel pg = MaterialModel::plasma(gold.omega_p());
    const double d1 = 0.05e-9, d2 = 5e-9; // two decades, both << lambda_p
    const double f1 = free_energy_zero_temperature(PlateSystem(pg, pg, d1)).value;
    const double f2 = free_energy_zero_temperature(PlateSystem(pg, pg, d2)).value;
    CHECK(f1 < 0.0);
    CHECK(f2 < 0.0);
    const double slope = std::log(std::abs(f2) / std::abs(f1)) / std::log(d2 / d1);
    CHECK(slope == doctest::Approx(-2.0).epsilon(0.025));
}

TEST_CASE("plasma gold approaches the ideal mirror in the retarded regime") {
    const double d = 2e-6;
    const MaterialModel pg = MaterialModel::plasma(gold.omega_p());
    const double p = pressure_zero_temperature(PlateSystem(pg, pg, d)).total;
    CHECK(p == doctest::Approx(retarded_pressure(d)).epsilon(0.05));
    CHECK(std::abs(p) < std::abs(retarded_pressure(d))); // finite conductivity weakens it
}

TEST_CASE("pressure equals -dF/dd for gold at 300 K") {
    QuadratureConfig cfg;
    for (double d : {150e-9, 500e-9, 2e-6}) {
        const PlateSystem sys(gold, gold, d);
        // freeze the truncation across the difference stencil
        QuadratureConfig frozen = cfg;
        const PressureBreakdown p = pressure(sys, 300.0, cfg);
        frozen.matsubara_max = p.matsubara_terms + p.matsubara_terms / 4 + 16;
        const double h = 1e-3 * d;
        const double fp =
            free_energy_area(PlateSystem(gold, gold, d + h), 300.0, frozen).value;
        const double fm =
            free_energy_area(PlateSystem(gold, gold, d - h), 300.0, frozen).value;
        const double dF = -(fp - fm) / (2.0 * h);
        const double tol = std::max(1e-3 * std::abs(p.total), 3.0 * p.estimated_error);
        CHECK(std::abs(p.total - dF) <= tol);
    }
}

TEST_CASE("sign and monotonicity along a gap sweep") {
    double prev = -1e300;
    for (double d : {0.5e-6, 1e-6, 2e-6, 4e-6, 8e-6}) {
        const PressureBreakdown p = pressure(PlateSystem(gold, gold, d), 300.0);
        const FreeEnergyResult f = free_energy_area(PlateSystem(gold, gold, d), 300.0);
        CHECK(p.total < 0.0);
        CHECK(f.value < 0.0);
        CHECK(std::abs(p.total) < std::abs(prev));
        prev = p.total;
    }
}

TEST_CASE("doubling the quadrature budget moves results by less than rel_tol") {
    const PlateSystem sys(gold, gold, 500e-9);
    QuadratureConfig base;
    const PressureBreakdown p1 = pressure(sys, 300.0, base);
    QuadratureConfig fine;
    fine.k_nodes = 2 * base.k_nodes;
    fine.matsubara_max = 2 * p1.matsubara_terms;
    const PressureBreakdown p2 = pressure(sys, 300.0, fine);
    CHECK(std::abs(p1.total - p2.total) <= 2.0 * base.rel_tol * std::abs(p2.total));
    // and the reported error bound is honest
    CHECK(std::abs(p1.total - p2.total) <=
          std::max(p1.estimated_error * 4.0, 1e-12 * std::abs(p2.total)));
}

TEST_CASE("static-term anomaly bookkeeping") {
    const double d = 1e-6;
    const PressureBreakdown p_drude = pressure(PlateSystem(gold, gold, d), 300.0);
    CHECK(p_drude.n0.te == 0.0);
    const MaterialModel pg = MaterialModel::plasma(gold.omega_p());
    const PressureBreakdown p_plasma = pressure(PlateSystem(pg, pg, d), 300.0);
    CHECK(p_plasma.n0.te < 0.0);
}

TEST_CASE("compare_models: the tau -> infinity discontinuity is the static TE term") {
    const MaterialModel long_tau = MaterialModel::drude(gold.omega_p(), 1000.0 * gold.tau());
    const ModelComparison cmp = compare_models(1e-6, 300.0, long_tau);
    // P_drude - P_plasma converges to minus the plasma n = 0 TE term
    CHECK(cmp.difference == doctest::Approx(-cmp.plasma_n0_te).epsilon(0.01));
    CHECK(cmp.plasma_n0_te < 0.0);

    // at T = 0 the limits commute: the models agree to 0.1%
    const ModelComparison cmp0 = compare_models(1e-6, 0.0, long_tau);
    CHECK(std::abs(cmp0.difference) < 1e-3 * std::abs(cmp0.drude.total));
}

TEST_CASE("entropy: Nernst-consistent ideal mirrors, consistent refinement") {
    const PlateSystem sys(ideal, ideal, 1e-6);
    const EntropyResult s300 = entropy_area(sys, 300.0);
    const EntropyResult s1 = entropy_area(sys, 1.0);
    CHECK(std::abs(s1.value) < 1e-3 * std::abs(s300.value));
    // step-halving levels agree (the op would throw otherwise)
    QuadratureConfig cfg;
    CHECK(s300.estimated_error <=
          5.0 * cfg.rel_tol * std::max(std::abs(s300.value), 1e-300) * 10.0);
}

TEST_CASE("thermal correction vanishes with T and matches the asymptote difference") {
    const PlateSystem small(ideal, ideal, 1e-6);
    const ThermalCorrectionResult tiny = thermal_correction(small, 5.0);
    CHECK(std::abs(tiny.value) < 1e-6 * std::abs(tiny.at_zero.total));

    const double lamT = hbar * c / (2.0 * kB * 300.0);
    const double d = 5.0 * lamT;
    const PlateSystem big(ideal, ideal, d);
    const ThermalCorrectionResult corr = thermal_correction(big, 300.0);
    const double expected = thermal_pressure(d, 300.0) - retarded_pressure(d);
    CHECK(corr.value == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("asymptote closed forms") {
    const PlateSystem sys(ideal, ideal, 1e-6);
    const AsymptoteResult ret = asymptote(Regime::Retarded, sys, 0.0);
    CHECK(ret.pressure == doctest::Approx(-1.3e-3).epsilon(0.005));
    CHECK(ret.free_energy == doctest::Approx(-M_PI * M_PI * hbar * c / 720.0 / 1e-18)
                                 .epsilon(1e-12));

    const AsymptoteResult th_ideal = asymptote(Regime::Thermal, sys, 300.0);
    const AsymptoteResult th_gold =
        asymptote(Regime::Thermal, PlateSystem(gold, gold, 1e-6), 300.0);
    CHECK(th_gold.free_energy == doctest::Approx(0.5 * th_ideal.free_energy).epsilon(1e-14));
    CHECK(th_gold.pressure == doctest::Approx(0.5 * th_ideal.pressure).epsilon(1e-14));
    CHECK(th_ideal.pressure ==
          doctest::Approx(thermal_pressure(1e-6, 300.0)).epsilon(1e-14));

    const PlateSystem gsys(gold, gold, 1e-6);
    const AsymptoteResult nr1 = asymptote(Regime::NonRetarded, gsys, 0.0);
    const AsymptoteResult nr2 =
        asymptote(Regime::NonRetarded, PlateSystem(gold, gold, 2e-6), 0.0);
    CHECK(nr1.free_energy / nr2.free_energy == doctest::Approx(4.0).epsilon(1e-14));
    CHECK_THROWS_AS(asymptote(Regime::NonRetarded, sys, 0.0), unsupported_model_error);
    CHECK_THROWS_AS(asymptote(Regime::Thermal, sys, 0.0), std::domain_error);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(PlateSystem(ideal, ideal, 0.0), std::domain_error);
    CHECK_THROWS_AS(pressure(PlateSystem(ideal, ideal, 1e-6), 0.0), std::domain_error);
    CHECK_THROWS_AS(free_energy_area(PlateSystem(ideal, ideal, 1e-6), -5.0),
                    std::domain_error);
    QuadratureConfig bad;
    bad.k_nodes = 4;
    CHECK_THROWS_AS(pressure(PlateSystem(ideal, ideal, 1e-6), 300.0, bad),
                    std::domain_error);
    QuadratureConfig bad2;
    bad2.rel_tol = 0.5;
    CHECK_THROWS_AS(pressure(PlateSystem(ideal, ideal, 1e-6), 300.0, bad2),
                    std::domain_error);
    CHECK_THROWS_AS(compare_models(1e-6, 300.0, MaterialModel::plasma(1e16)),
                    unsupported_model_error);
}
