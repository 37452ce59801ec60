// Physical constants (SI, CODATA 2018) and a few mathematical constants
// used across the engine. All internal quantities are SI; unit-suffix
// parsing lives in the CLI layer.
#ifndef CASIMIR_CONSTANTS_HPP
#define CASIMIR_CONSTANTS_HPP

namespace casimir {
namespace constants {

// CODATA 2018. h, k_B, c, e are exact by the 2019 SI redefinition;
// eps0/mu0 carry the published uncertainty.
inline constexpr double hbar = 1.054571817e-34;    // J s
inline constexpr double k_B = 1.380649e-23;        // J/K (exact)
inline constexpr double c_light = 299792458.0;     // m/s (exact)
inline constexpr double eps0 = 8.8541878128e-12;   // F/m
inline constexpr double mu0 = 1.25663706212e-6;    // H/m
inline constexpr double eV = 1.602176634e-19;      // J (exact)

inline constexpr const char* version = "CODATA-2018";

// zeta(3), Apery's constant; the coefficient of the classical
// (high-temperature) Casimir asymptotes.
inline constexpr double zeta3 = 1.2020569031595942854;

} // namespace constants
} // namespace casimir

#endif
