// Quasiparticle relaxation diagnostics for a Drude metal: the naive
// Ohmic charge-relaxation rate sigma/eps0, the telegraphist eigenmodes
// of s^2 + s/tau + omega_p^2 = 0 (time dependence e^{st}), and the
// overdamped magnetic-diffusion eigenfrequency omega_k = -i D k^2.
#ifndef CASIMIR_RELAXATION_HPP
#define CASIMIR_RELAXATION_HPP

#include <complex>

#include <json.hpp>

#include "casimir/materials.hpp"

namespace casimir {

// sigma_DC / eps0 = omega_p^2 tau; the (too fast) estimate from Ohm's
// law plus charge conservation alone.
double naive_relaxation_rate(const MaterialModel& drude);

struct TelegraphistRoots {
    // roots of s^2 + s/tau + omega_p^2 = 0; slow = smaller |Re|
    std::complex<double> slow;
    std::complex<double> fast;
    bool underdamped = false; // omega_p tau > 1/2
};
TelegraphistRoots telegraphist_eigenfrequencies(const MaterialModel& drude);

// omega_k = -i D k^2, purely imaginary (diffusive decay).
std::complex<double> diffusion_eigenfrequency(const MaterialModel& drude, double k);

struct RelaxationReport {
    double naive_rate = 0.0;           // 1/s
    std::complex<double> root_slow;    // s-plane
    std::complex<double> root_fast;
    std::complex<double> omega_slow;   // omega = i s (e^{-i omega t} convention)
    std::complex<double> omega_fast;
    double decay_rate = 0.0;           // -max Re(s), 1/s
    double oscillation = 0.0;          // |Im root|, rad/s; 0 when overdamped
    bool underdamped = false;
    double diffusivity = 0.0;          // m^2/s
    double inv_2pi_tau_Hz = 0.0;       // 1/(2 pi tau)
    double omega_T_over_2pi_Hz = 0.0;  // thermal frequency at the given T
};
RelaxationReport relaxation_report(const MaterialModel& drude, double temperature_K);

nlohmann::json to_json(const RelaxationReport& report);

} // namespace casimir

#endif
