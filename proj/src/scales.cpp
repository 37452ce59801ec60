#include "casimir/scales.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

double thermal_frequency(double temperature_K) {
    if (temperature_K < 0.0)
        throw std::domain_error("thermal_frequency: negative temperature");
    return constants::k_B * temperature_K / constants::hbar;
}

double thermal_wavelength(double temperature_K) {
    if (temperature_K <= 0.0)
        throw std::domain_error("thermal_wavelength: requires T > 0");
    return constants::c_light / (2.0 * thermal_frequency(temperature_K));
}

double bose_occupation(double omega_rad_s, double temperature_K) {
    if (omega_rad_s < 0.0 || temperature_K < 0.0)
        throw std::domain_error("bose_occupation: negative argument");
    if (temperature_K == 0.0) return 0.0;
    if (omega_rad_s == 0.0)
        throw std::domain_error("bose_occupation: omega = 0 diverges at T > 0");
    const double x = constants::hbar * omega_rad_s / (constants::k_B * temperature_K);
    return 1.0 / std::expm1(x);
}

} // namespace casimir
