#include "casimir/fresnel.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

using complexd = std::complex<double>;
using namespace std::complex_literals;

// Principal square root flipped onto the Im >= 0 sheet.
complexd sqrt_upper(complexd z) {
    complexd w = std::sqrt(z);
    if (w.imag() < 0.0) w = -w;
    return w;
}

// i mu0 omega sigma(omega) without dividing by omega, so the omega -> 0
// limits are exact: plasma gives the constant -omega_p^2/c^2, Drude
// vanishes linearly.
complexd medium_term(const MaterialModel& m, complexd omega) {
    const double c2 = constants::c_light * constants::c_light;
    if (m.is_vacuum()) return 0.0;
    if (m.is_plasma()) {
        const double wp = m.omega_p();
        return -wp * wp / c2;
    }
    // Drude: i mu0 omega sigma_DC/(1 - i omega tau) = (i omega / D)/(1 - i omega tau)
    const double inv_D = constants::mu0 * dc_conductivity(m);
    return 1i * omega * inv_D / (1.0 - 1i * omega * m.tau());
}

} // namespace

complexd axial_vacuum(double omega, double k_par) {
    if (omega < 0.0 || k_par < 0.0)
        throw std::domain_error("axial_vacuum: negative argument");
    const double koc = omega / constants::c_light;
    if (k_par <= koc) return complexd(std::sqrt((koc - k_par) * (koc + k_par)), 0.0);
    return complexd(0.0, std::sqrt((k_par - koc) * (k_par + koc)));
}

complexd axial_medium(const MaterialModel& m, complexd omega, double k_par) {
    if (m.is_perfect_conductor())
        throw unsupported_model_error("axial_medium: perfect conductor");
    const double c2 = constants::c_light * constants::c_light;
    const complexd kz2 = omega * omega / c2 - k_par * k_par;
    return sqrt_upper(medium_term(m, omega) + kz2);
}

complexd reflection(const MaterialModel& m, complexd omega, double k_par,
                    Polarization pol) {
    if (m.is_perfect_conductor()) return pol == Polarization::TE ? -1.0 : 1.0;
    if (m.is_vacuum()) return 0.0;

    const double c2 = constants::c_light * constants::c_light;
    const complexd kz2 = omega * omega / c2 - k_par * k_par;
    complexd kz = sqrt_upper(kz2);
    if (kz.imag() == 0.0 && kz.real() < 0.0) kz = -kz;
    const complexd kzm = sqrt_upper(medium_term(m, omega) + kz2);

    if (pol == Polarization::TE) return (kz - kzm) / (kz + kzm);

    if (omega == 0.0) return 1.0; // |eps| -> infinity for plasma and Drude
    const complexd eps = permittivity(m, omega);
    return (eps * kz - kzm) / (eps * kz + kzm);
}

void reflection_pair(const MaterialModel& m, double omega, double k_par,
                     complexd& r_te, complexd& r_tm) {
    if (m.is_perfect_conductor()) {
        r_te = -1.0;
        r_tm = 1.0;
        return;
    }
    if (m.is_vacuum()) {
        r_te = 0.0;
        r_tm = 0.0;
        return;
    }
    const double c2 = constants::c_light * constants::c_light;
    const complexd om(omega, 0.0);
    const complexd kz2 = om * om / c2 - k_par * k_par;
    complexd kz = sqrt_upper(kz2);
    if (kz.imag() == 0.0 && kz.real() < 0.0) kz = -kz;
    const complexd kzm = sqrt_upper(medium_term(m, om) + kz2);
    r_te = (kz - kzm) / (kz + kzm);
    if (omega == 0.0) {
        r_tm = 1.0;
        return;
    }
    const complexd eps = permittivity(m, om);
    r_tm = (eps * kz - kzm) / (eps * kz + kzm);
}

complexd reflection_te(const MaterialModel& m, double omega, double k_par) {
    return reflection(m, complexd(omega, 0.0), k_par, Polarization::TE);
}

complexd reflection_tm(const MaterialModel& m, double omega, double k_par) {
    return reflection(m, complexd(omega, 0.0), k_par, Polarization::TM);
}

double reflection_imag_axis(const MaterialModel& m, double xi, double k_par,
                            Polarization pol) {
    if (xi < 0.0) throw std::domain_error("reflection_imag_axis: xi < 0");
    const ImagAxisInterface layer(m, xi);
    const double q = std::hypot(xi / constants::c_light, k_par);
    return pol == Polarization::TE ? layer.te(q, k_par) : layer.tm(q, k_par);
}

ImagAxisInterface::ImagAxisInterface(const MaterialModel& m, double xi) {
    if (xi < 0.0) throw std::domain_error("ImagAxisInterface: xi < 0");
    if (m.is_perfect_conductor()) {
        kind_ = Kind::Perfect;
    } else if (m.is_vacuum()) {
        kind_ = Kind::Vacuum;
    } else if (xi == 0.0) {
        // hard-coded static limits; see reflection_imag_axis contract
        if (m.is_drude()) {
            kind_ = Kind::StaticDrude;
        } else {
            kind_ = Kind::StaticPlasma;
            wp_over_c_ = m.omega_p() / constants::c_light;
        }
    } else {
        kind_ = Kind::Metal;
        eps_ = permittivity_imag_axis(m, xi);
        const double xoc = xi / constants::c_light;
        shift_ = (eps_ - 1.0) * xoc * xoc;
    }
}

double ImagAxisInterface::te(double q, double k_par) const {
    switch (kind_) {
    case Kind::Perfect: return -1.0;
    case Kind::Vacuum: return 0.0;
    case Kind::StaticDrude: return 0.0;
    case Kind::StaticPlasma: {
        const double km = std::hypot(k_par, wp_over_c_);
        return (k_par - km) / (k_par + km);
    }
    case Kind::Metal: {
        const double km = std::sqrt(q * q + shift_);
        return (q - km) / (q + km);
    }
    }
    return 0.0;
}

double ImagAxisInterface::tm(double q, double k_par) const {
    (void)k_par;
    switch (kind_) {
    case Kind::Perfect: return 1.0;
    case Kind::Vacuum: return 0.0;
    case Kind::StaticDrude: return 1.0;
    case Kind::StaticPlasma: return 1.0;
    case Kind::Metal: {
        const double km = std::sqrt(q * q + shift_);
        return (eps_ * q - km) / (eps_ * q + km);
    }
    }
    return 0.0;
}

double surface_plasmon_frequency(const MaterialModel& plasma_model, double k_par) {
    if (!plasma_model.is_plasma())
        throw unsupported_model_error("surface_plasmon_frequency: requires a plasma model");
    if (!(k_par > 0.0))
        throw std::domain_error("surface_plasmon_frequency: requires k_par > 0");

    const double wp = plasma_model.omega_p();
    const double c = constants::c_light;

    // TM pole in the evanescent sector: eps(w) kappa + kappa_m = 0 with
    // kappa = sqrt(k^2 - w^2/c^2), kappa_m = sqrt(k^2 - eps w^2/c^2).
    // f < 0 at w -> 0 (eps -> -inf) and f > 0 at the upper edge.
    auto f = [&](double w) {
        const double eps = 1.0 - wp * wp / (w * w);
        const double kap = std::sqrt(std::max(k_par * k_par - w * w / (c * c), 0.0));
        const double km = std::sqrt(k_par * k_par - eps * w * w / (c * c));
        return eps * kap + km;
    };

    const double upper = std::min(c * k_par, wp / std::sqrt(2.0));
    double lo = upper * 1e-8;
    double hi = upper * (1.0 - 1e-13);
    double flo = f(lo);
    double fhi = f(hi);
    // Walk the lower bracket down if needed (f(lo) must be negative).
    for (int i = 0; i < 60 && !(flo < 0.0); ++i) {
        lo *= 0.5;
        flo = f(lo);
    }
    if (!(flo < 0.0) || !(fhi > 0.0))
        throw no_root_error("surface_plasmon_frequency: bracketing failed");

    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * hi) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace casimir
