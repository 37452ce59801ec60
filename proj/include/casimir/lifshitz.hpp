// Thermodynamics of the two-plate system: free energy per area, pressure
// and entropy from the imaginary-axis (Matsubara) representation
//
//   F(d,T) = (k_B T/2pi) sum'_{n>=0} int_0^inf k dk sum_pol ln(1 - r1 r2 e^{-2 q_n d}),
//   P(d,T) = -(k_B T/pi) sum'_{n>=0} int_0^inf k dk q_n sum_pol r1 r2 e^{-2 q_n d}/(1 - ...),
//
// with q_n = sqrt(xi_n^2/c^2 + k^2), xi_n = 2 pi n k_B T/hbar, and the
// n = 0 term at half weight. The k-integral runs in x = 2 q_n d over
// fixed Gauss-Legendre panels; the T = 0 limit replaces the sum by a
// log-panelled xi-integral. Closed-form asymptotes and the Drude/plasma
// comparison live here as well.
#ifndef CASIMIR_LIFSHITZ_HPP
#define CASIMIR_LIFSHITZ_HPP

#include "casimir/materials.hpp"

namespace casimir {

struct PlateSystem {
    MaterialModel material_1;
    MaterialModel material_2;
    double gap; // m, > 0

    PlateSystem(MaterialModel m1, MaterialModel m2, double gap_m);
};

struct QuadratureConfig {
    int k_nodes = 24;              // Gauss-Legendre order per x-panel (>= 16)
    long matsubara_max = 0;        // explicit term count; 0 = auto truncation
    double rel_tol = 1e-7;         // in (0, 1e-2]
    double temp_step_fraction = 1e-2; // entropy differencing step, dT = f*T

    void validate() const;
};

struct PolarizationSplit {
    double te = 0.0;
    double tm = 0.0;
    double total() const { return te + tm; }
};

struct PressureBreakdown {
    double total = 0.0;              // Pa; negative = attraction
    PolarizationSplit by_polarization;
    PolarizationSplit n0;            // the n = 0 Matsubara term alone (Pa)
    double estimated_error = 0.0;    // Pa
    long matsubara_terms = 0;        // terms actually summed (0 for T = 0 path)
};

struct FreeEnergyResult {
    double value = 0.0;              // J/m^2
    PolarizationSplit by_polarization;
    PolarizationSplit n0;
    double estimated_error = 0.0;
    long matsubara_terms = 0;
};

// xi_n = 2 pi n k_B T / hbar.
double matsubara_xi(double temperature_K, long n);

FreeEnergyResult free_energy_area(const PlateSystem& sys, double temperature_K,
                                  const QuadratureConfig& cfg = {});
PressureBreakdown pressure(const PlateSystem& sys, double temperature_K,
                           const QuadratureConfig& cfg = {});

// Genuine T = 0 evaluation (xi-integral), not a small-T proxy.
FreeEnergyResult free_energy_zero_temperature(const PlateSystem& sys,
                                              const QuadratureConfig& cfg = {});
PressureBreakdown pressure_zero_temperature(const PlateSystem& sys,
                                            const QuadratureConfig& cfg = {});

// S = -dF/dT by central differences (step dT = temp_step_fraction*T),
// Richardson-refined once; `coarse` is the refinement one level up, and
// the error estimate is their disagreement. The Matsubara truncation is
// frozen across the difference stencil so the steps see a smooth F(T).
struct EntropyResult {
    double value = 0.0;           // J/(K m^2)
    double coarse = 0.0;
    double estimated_error = 0.0;
};
EntropyResult entropy_area(const PlateSystem& sys, double temperature_K,
                           const QuadratureConfig& cfg = {});

// P(d,T) - P(d,0), with propagated error estimate.
struct ThermalCorrectionResult {
    double value = 0.0;           // Pa
    double estimated_error = 0.0;
    PressureBreakdown at_temperature;
    PressureBreakdown at_zero;
};
ThermalCorrectionResult thermal_correction(const PlateSystem& sys, double temperature_K,
                                           const QuadratureConfig& cfg = {});

// Closed-form regime asymptotes.
//   nonretarded: dimensional-analysis scale -hbar omega_p/d^2 (free energy)
//                and -hbar omega_p/d^3 (pressure); order of magnitude only.
//   retarded:    ideal-mirror F = -pi^2 hbar c/(720 d^3), P = -pi^2 hbar c/(240 d^4)
//   thermal:     ideal-mirror F = -zeta(3) k_B T/(8 pi d^2), P = -zeta(3) k_B T/(4 pi d^3);
//                halved when a Drude plate suppresses the static TE term.
enum class Regime { NonRetarded, Retarded, Thermal };
struct AsymptoteResult {
    double free_energy = 0.0; // J/m^2
    double pressure = 0.0;    // Pa
};
AsymptoteResult asymptote(Regime regime, const PlateSystem& sys, double temperature_K);

// Drude vs lossless plasma with the same omega_p, at one (d, T).
struct ModelComparison {
    PressureBreakdown drude;
    PressureBreakdown plasma;
    double difference = 0.0;   // P_drude - P_plasma, Pa
    double plasma_n0_te = 0.0; // the plasma run's n = 0 TE pressure term, Pa
};
ModelComparison compare_models(double gap_m, double temperature_K,
                               const MaterialModel& drude_model,
                               const QuadratureConfig& cfg = {});

} // namespace casimir

#endif
