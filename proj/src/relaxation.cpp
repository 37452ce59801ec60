#include "casimir/relaxation.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/scales.hpp"

namespace casimir {

namespace {

void require_drude(const MaterialModel& m, const char* who) {
    if (!m.is_drude())
        throw unsupported_model_error(std::string(who) + ": requires a Drude model");
}

} // namespace

double naive_relaxation_rate(const MaterialModel& drude) {
    require_drude(drude, "naive_relaxation_rate");
    return dc_conductivity(drude) / constants::eps0;
}

TelegraphistRoots telegraphist_eigenfrequencies(const MaterialModel& drude) {
    require_drude(drude, "telegraphist_eigenfrequencies");
    const double tau = drude.tau();
    const double wp = drude.omega_p();
    const double b = 1.0 / tau;
    const double disc = b * b - 4.0 * wp * wp;

    TelegraphistRoots out;
    if (disc >= 0.0) {
        // overdamped; q-form avoids cancellation in the slow root when
        // omega_p tau << 1 (the Ohmic limit sigma/eps0)
        const double q = -0.5 * (b + std::sqrt(disc));
        out.fast = q;
        out.slow = wp * wp / q;
        out.underdamped = false;
    } else {
        const double im = 0.5 * std::sqrt(-disc);
        out.slow = std::complex<double>(-0.5 * b, im);
        out.fast = std::complex<double>(-0.5 * b, -im);
        out.underdamped = true;
    }
    return out;
}

std::complex<double> diffusion_eigenfrequency(const MaterialModel& drude, double k) {
    require_drude(drude, "diffusion_eigenfrequency");
    if (k < 0.0) throw std::domain_error("diffusion_eigenfrequency: k < 0");
    return std::complex<double>(0.0, -magnetic_diffusivity(drude) * k * k);
}

RelaxationReport relaxation_report(const MaterialModel& drude, double temperature_K) {
    require_drude(drude, "relaxation_report");
    if (!(temperature_K > 0.0))
        throw std::domain_error("relaxation_report: requires T > 0");

    RelaxationReport out;
    out.naive_rate = naive_relaxation_rate(drude);

    const TelegraphistRoots roots = telegraphist_eigenfrequencies(drude);
    out.root_slow = roots.slow;
    out.root_fast = roots.fast;
    out.underdamped = roots.underdamped;
    // omega = i s maps decay Re(s) < 0 onto Im(omega) < 0
    out.omega_slow = std::complex<double>(0.0, 1.0) * roots.slow;
    out.omega_fast = std::complex<double>(0.0, 1.0) * roots.fast;
    out.decay_rate = -std::max(roots.slow.real(), roots.fast.real());
    out.oscillation = roots.underdamped ? std::abs(roots.slow.imag()) : 0.0;
    out.diffusivity = magnetic_diffusivity(drude);
    out.inv_2pi_tau_Hz = 1.0 / (2.0 * M_PI * drude.tau());
    out.omega_T_over_2pi_Hz = thermal_frequency(temperature_K) / (2.0 * M_PI);
    return out;
}

nlohmann::json to_json(const RelaxationReport& r) {
    auto cplx = [](std::complex<double> z) {
        return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
    };
    return nlohmann::json{
        {"naive_rate_per_s", r.naive_rate},
        {"telegraphist_roots_s_plane", {cplx(r.root_slow), cplx(r.root_fast)}},
        {"telegraphist_roots_omega_plane", {cplx(r.omega_slow), cplx(r.omega_fast)}},
        {"decay_rate_per_s", r.decay_rate},
        {"oscillation_rad_s", r.oscillation},
        {"underdamped", r.underdamped},
        {"diffusivity_m2_s", r.diffusivity},
        {"comparison",
         {{"inv_2pi_tau_Hz", r.inv_2pi_tau_Hz},
          {"omega_T_over_2pi_Hz", r.omega_T_over_2pi_Hz}}},
    };
}

} // namespace casimir
