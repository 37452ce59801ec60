// Material response models: perfect conductor, lossless plasma, Drude
// metal, plus a vacuum test model (r = 0). Conductivities follow
//   Drude:  sigma(omega) = sigma_DC / (1 - i omega tau),  sigma_DC = eps0 omega_p^2 tau
//   plasma: sigma(omega) = i eps0 omega_p^2 / omega
// and the permittivity is eps(omega) = 1 + i sigma(omega) / (eps0 omega).
#ifndef CASIMIR_MATERIALS_HPP
#define CASIMIR_MATERIALS_HPP

#include <complex>
#include <string>
#include <variant>

#include <json.hpp>

namespace casimir {

struct PerfectConductor {};
struct Vacuum {};

struct Plasma {
    double omega_p; // rad/s
};

struct Drude {
    double omega_p; // rad/s
    double tau;     // s
};

class MaterialModel {
  public:
    using Variant = std::variant<PerfectConductor, Vacuum, Plasma, Drude>;

    MaterialModel(Variant v, std::string name);

    static MaterialModel perfect_conductor();
    static MaterialModel vacuum();
    static MaterialModel plasma(double omega_p_rad_s);
    static MaterialModel drude(double omega_p_rad_s, double tau_s);
    // Drude gold, hbar omega_p = 9 eV, tau = 27 fs.
    static MaterialModel gold();

    bool is_perfect_conductor() const { return std::holds_alternative<PerfectConductor>(v_); }
    bool is_vacuum() const { return std::holds_alternative<Vacuum>(v_); }
    bool is_plasma() const { return std::holds_alternative<Plasma>(v_); }
    bool is_drude() const { return std::holds_alternative<Drude>(v_); }

    // omega_p / tau for the models that carry them; unsupported_model_error otherwise.
    double omega_p() const;
    double tau() const;

    const std::string& name() const { return name_; }
    const Variant& variant() const { return v_; }

  private:
    Variant v_;
    std::string name_;
};

// sigma(omega), S/m, at complex frequency (analytic continuation).
// PerfectConductor is unsupported (its response enters the Fresnel layer
// as r = -1 / +1 directly); Plasma diverges at omega = 0.
std::complex<double> conductivity(const MaterialModel& m, std::complex<double> omega);

// eps(omega) = 1 + i sigma/(eps0 omega); same restrictions, plus omega != 0.
std::complex<double> permittivity(const MaterialModel& m, std::complex<double> omega);

// eps(i xi) on the imaginary axis, real-valued fast path (xi > 0):
//   plasma: 1 + omega_p^2/xi^2,   Drude: 1 + omega_p^2/(xi (xi + 1/tau))
double permittivity_imag_axis(const MaterialModel& m, double xi);

// sigma_DC = eps0 omega_p^2 tau (Drude only).
double dc_conductivity(const MaterialModel& m);

// Reduced plasma wavelength (Meissner penetration depth) c/omega_p.
double plasma_wavelength(const MaterialModel& m);

// Magnetic diffusivity D = 1/(mu0 sigma_DC) = plasma_wavelength^2/tau (Drude only).
double magnetic_diffusivity(const MaterialModel& m);

// Material definition from JSON:
//   {"name": str, "model": "perfect"|"plasma"|"drude"|"vacuum",
//    "omega_p_eV": num, "tau_fs": num}
// Unknown keys are rejected.
MaterialModel material_from_json(const nlohmann::json& doc);

} // namespace casimir

#endif
