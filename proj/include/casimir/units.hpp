// Unit-suffixed quantity parsing for the CLI. Bare numbers are rejected;
// plasma frequencies are entered as energies (hbar omega_p) and converted
// via omega_p = E/hbar.
#ifndef CASIMIR_UNITS_HPP
#define CASIMIR_UNITS_HPP

#include <string_view>

namespace casimir {

enum class Quantity {
    Length,        // m, mm, um, nm
    Temperature,   // K
    Time,          // s, fs
    PlasmaEnergy,  // eV, meV -> rad/s via E/hbar
    Frequency,     // Hz, THz
};

// "150nm" -> 1.5e-7; "9eV" (PlasmaEnergy) -> 1.367e16 rad/s; throws
// parse_error naming the offending token.
double parse_quantity(std::string_view text, Quantity kind);

} // namespace casimir

#endif
