// Characteristic frequency and length scales of the thermal Casimir
// problem, plus the Bose occupation.
#ifndef CASIMIR_SCALES_HPP
#define CASIMIR_SCALES_HPP

namespace casimir {

// omega_T = k_B T / hbar. Zero at T = 0. Throws std::domain_error for T < 0.
double thermal_frequency(double temperature_K);

// Reduced thermal wavelength c / (2 omega_T). Throws std::domain_error
// at T <= 0 (infinite wavelength).
double thermal_wavelength(double temperature_K);

// Bose distribution n = 1/(exp(hbar omega / k_B T) - 1), evaluated with
// expm1 so the hbar*omega << k_B T regime keeps full precision.
// Returns 0 at T = 0. Throws std::domain_error for omega = 0 with T > 0
// (divergent occupation; callers wanting the limit use k_B T / hbar omega
// explicitly) and for negative arguments.
double bose_occupation(double omega_rad_s, double temperature_K);

} // namespace casimir

#endif
