#include "casimir/materials.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

void check_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw std::domain_error(std::string(what) + " must be positive and finite");
}

} // namespace

MaterialModel::MaterialModel(Variant v, std::string name)
    : v_(std::move(v)), name_(std::move(name)) {
    if (const auto* p = std::get_if<Plasma>(&v_)) {
        check_positive(p->omega_p, "plasma omega_p");
    } else if (const auto* d = std::get_if<Drude>(&v_)) {
        check_positive(d->omega_p, "Drude omega_p");
        check_positive(d->tau, "Drude tau");
    }
}

MaterialModel MaterialModel::perfect_conductor() {
    return MaterialModel(PerfectConductor{}, "perfect");
}

MaterialModel MaterialModel::vacuum() { return MaterialModel(Vacuum{}, "vacuum"); }

MaterialModel MaterialModel::plasma(double omega_p_rad_s) {
    return MaterialModel(Plasma{omega_p_rad_s}, "plasma");
}

MaterialModel MaterialModel::drude(double omega_p_rad_s, double tau_s) {
    return MaterialModel(Drude{omega_p_rad_s, tau_s}, "drude");
}

MaterialModel MaterialModel::gold() {
    const double omega_p = 9.0 * constants::eV / constants::hbar;
    return MaterialModel(Drude{omega_p, 27.0e-15}, "gold");
}

double MaterialModel::omega_p() const {
    if (const auto* p = std::get_if<Plasma>(&v_)) return p->omega_p;
    if (const auto* d = std::get_if<Drude>(&v_)) return d->omega_p;
    throw unsupported_model_error("material '" + name_ + "' has no plasma frequency");
}

double MaterialModel::tau() const {
    if (const auto* d = std::get_if<Drude>(&v_)) return d->tau;
    throw unsupported_model_error("material '" + name_ + "' has no relaxation time");
}

std::complex<double> conductivity(const MaterialModel& m, std::complex<double> omega) {
    using namespace std::complex_literals;
    if (m.is_perfect_conductor())
        throw unsupported_model_error("conductivity: perfect conductor has no finite response");
    if (m.is_vacuum()) return 0.0;
    if (m.is_plasma()) {
        if (omega == 0.0)
            throw std::domain_error("conductivity: plasma model diverges at omega = 0");
        return 1i * constants::eps0 * m.omega_p() * m.omega_p() / omega;
    }
    const double sigma_dc = dc_conductivity(m);
    return sigma_dc / (1.0 - 1i * omega * m.tau());
}

std::complex<double> permittivity(const MaterialModel& m, std::complex<double> omega) {
    using namespace std::complex_literals;
    if (m.is_vacuum()) return 1.0;
    if (omega == 0.0)
        throw std::domain_error("permittivity: omega = 0 is singular for metals");
    return 1.0 + 1i * conductivity(m, omega) / (constants::eps0 * omega);
}

double permittivity_imag_axis(const MaterialModel& m, double xi) {
    if (m.is_vacuum()) return 1.0;
    if (!(xi > 0.0))
        throw std::domain_error("permittivity_imag_axis: requires xi > 0");
    const double wp = m.omega_p(); // throws for perfect conductor
    if (m.is_plasma()) return 1.0 + wp * wp / (xi * xi);
    return 1.0 + wp * wp / (xi * (xi + 1.0 / m.tau()));
}

double dc_conductivity(const MaterialModel& m) {
    if (!m.is_drude())
        throw unsupported_model_error("dc_conductivity: requires a Drude model");
    const double wp = m.omega_p();
    return constants::eps0 * wp * wp * m.tau();
}

double plasma_wavelength(const MaterialModel& m) {
    return constants::c_light / m.omega_p();
}

double magnetic_diffusivity(const MaterialModel& m) {
    return 1.0 / (constants::mu0 * dc_conductivity(m));
}

MaterialModel material_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw parse_error("material JSON: expected an object");
    static const char* known[] = {"name", "model", "omega_p_eV", "tau_fs"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw parse_error("material JSON: unknown key '" + key + "'");
    }
    if (!doc.contains("model")) throw parse_error("material JSON: missing 'model'");
    const std::string model = doc.at("model").get<std::string>();
    const std::string name = doc.value("name", model);

    auto require = [&](const char* key) -> double {
        if (!doc.contains(key))
            throw parse_error("material JSON: model '" + model + "' requires '" + key + "'");
        if (!doc.at(key).is_number())
            throw parse_error(std::string("material JSON: '") + key + "' must be a number");
        return doc.at(key).get<double>();
    };
    auto reject = [&](const char* key) {
        if (doc.contains(key))
            throw parse_error("material JSON: key '" + std::string(key) +
                              "' not allowed for model '" + model + "'");
    };

    if (model == "perfect") {
        reject("omega_p_eV");
        reject("tau_fs");
        return MaterialModel(PerfectConductor{}, name);
    }
    if (model == "vacuum") {
        reject("omega_p_eV");
        reject("tau_fs");
        return MaterialModel(Vacuum{}, name);
    }
    if (model == "plasma") {
        reject("tau_fs");
        const double omega_p = require("omega_p_eV") * constants::eV / constants::hbar;
        return MaterialModel(Plasma{omega_p}, name);
    }
    if (model == "drude") {
        const double omega_p = require("omega_p_eV") * constants::eV / constants::hbar;
        const double tau = require("tau_fs") * 1e-15;
        return MaterialModel(Drude{omega_p, tau}, name);
    }
    throw parse_error("material JSON: unknown model '" + model + "'");
}

} // namespace casimir
