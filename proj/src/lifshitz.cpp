#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/fresnel.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

// x = 2 q d integration window; the integrand carries e^{-x}, so 60
// truncates below 1e-26. Geometric edges near 0 resolve the logarithmic
// endpoint of the free-energy integrand in the n = 0 term.
constexpr double kXEdges[] = {0.0, 1e-5, 1e-4, 1e-3, 1e-2, 0.1, 0.5,
                              1.0,  2.0,  4.0,  8.0,  16.0, 30.0, 60.0};
constexpr int kXPanels = 13;
constexpr long kMatsubaraCap = 1000000;
constexpr int kConsecutiveSmall = 3;

enum class Integrand { FreeEnergy, Pressure };

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// One Matsubara (or xi-node) x-integral at Gauss-Legendre order g,
// both polarizations.
//   free energy: int x ln(1 - r1 r2 e^{-x}) dx
//   pressure:    int x^2 (r1 r2 e^{-x}) / (1 - r1 r2 e^{-x}) dx
// with 1 - p e^{-x} evaluated as (1 - p) - p expm1(-x) to keep the
// p -> 1, x -> 0 corner exact.
PolarizationSplit term_integral(const ImagAxisInterface& l1, const ImagAxisInterface& l2,
                                double xi, double gap, Integrand kind, int g) {
    const GaussLegendreRule& rule = gauss_legendre(g);
    const double xn = 2.0 * xi * gap / constants::c_light;
    const double inv2d = 1.0 / (2.0 * gap);
    PolarizationSplit out;
    for (int p = 0; p < kXPanels; ++p) {
        const double half = 0.5 * (kXEdges[p + 1] - kXEdges[p]);
        const double mid = 0.5 * (kXEdges[p + 1] + kXEdges[p]);
        double s_te = 0.0, s_tm = 0.0;
        for (int i = 0; i < g; ++i) {
            const double t = mid + half * rule.nodes[i];
            const double x = xn + t;
            const double q = x * inv2d;
            const double k = std::sqrt(t * (t + 2.0 * xn)) * inv2d;
            const double p_te = l1.te(q, k) * l2.te(q, k);
            const double p_tm = l1.tm(q, k) * l2.tm(q, k);
            const double em = std::expm1(-x);
            const double ex = em + 1.0; // e^{-x}
            const double den_te = (1.0 - p_te) - p_te * em;
            const double den_tm = (1.0 - p_tm) - p_tm * em;
            double f_te, f_tm;
            if (kind == Integrand::FreeEnergy) {
                f_te = x * std::log(den_te);
                f_tm = x * std::log(den_tm);
            } else {
                f_te = x * x * p_te * ex / den_te;
                f_tm = x * x * p_tm * ex / den_tm;
            }
            s_te += rule.weights[i] * f_te;
            s_tm += rule.weights[i] * f_tm;
        }
        out.te += s_te * half;
        out.tm += s_tm * half;
    }
    return out;
}

struct EngineSum {
    PolarizationSplit value;
    PolarizationSplit n0;
    double abs_error = 0.0; // same units as value (pre-prefactor)
    long terms = 0;
};

// sum'_{n>=0} of the x-integrals, half-weight n = 0, with per-term
// order-halving error estimates and a geometric tail estimate.
EngineSum matsubara_sum(const PlateSystem& sys, double T, const QuadratureConfig& cfg,
                        Integrand kind) {
    EngineSum out;
    std::vector<double> te_terms, tm_terms;
    te_terms.reserve(256);
    tm_terms.reserve(256);

    const double xi1 = matsubara_xi(T, 1);
    const long budget = cfg.matsubara_max > 0 ? cfg.matsubara_max : kMatsubaraCap;
    const bool auto_stop = cfg.matsubara_max == 0;

    double partial = 0.0;
    double prev_mag = 0.0, last_mag = 0.0;
    int small_streak = 0;
    bool stopped = false;

    for (long n = 0; n <= budget; ++n) {
        const double xi = n * xi1;
        const ImagAxisInterface l1(sys.material_1, xi);
        const ImagAxisInterface l2(sys.material_2, xi);
        PolarizationSplit v = term_integral(l1, l2, xi, sys.gap, kind, cfg.k_nodes);
        PolarizationSplit coarse =
            term_integral(l1, l2, xi, sys.gap, kind, std::max(cfg.k_nodes / 2, 8));
        const double w = (n == 0) ? 0.5 : 1.0;
        v.te *= w;
        v.tm *= w;
        out.abs_error += w * (std::abs(v.te / w - coarse.te) + std::abs(v.tm / w - coarse.tm));
        te_terms.push_back(v.te);
        tm_terms.push_back(v.tm);
        if (n == 0) out.n0 = v;
        partial += v.te + v.tm;
        prev_mag = last_mag;
        last_mag = std::abs(v.te + v.tm);
        out.terms = n + 1;

        if (auto_stop && n >= 1) {
            const double xn = 2.0 * xi * sys.gap / constants::c_light;
            if (xn >= 1.0 && last_mag <= cfg.rel_tol * std::max(std::abs(partial), 1e-300)) {
                if (++small_streak >= kConsecutiveSmall) {
                    stopped = true;
                    break;
                }
            } else {
                small_streak = 0;
            }
        }
    }

    if (auto_stop && !stopped)
        throw non_convergence_error(
            "matsubara_sum: term budget exhausted before reaching rel_tol");

    // geometric tail from the measured decay ratio
    if (out.terms >= 3 && prev_mag > 0.0 && last_mag > 0.0) {
        const double rho = std::min(last_mag / prev_mag, 0.999);
        const double factor = rho / (1.0 - rho);
        const double tail_te = te_terms.back() * factor;
        const double tail_tm = tm_terms.back() * factor;
        te_terms.push_back(tail_te);
        tm_terms.push_back(tail_tm);
        out.abs_error += std::abs(tail_te) + std::abs(tail_tm);
    }

    out.value.te = pairwise_sum(te_terms);
    out.value.tm = pairwise_sum(tm_terms);
    return out;
}

// T = 0: quadrature over xi with a closed [0, xi_0] panel plus log-spaced
// panels up to xi_max = 30 c/d (x already >= 60 there).
EngineSum xi_integral_once(const PlateSystem& sys, Integrand kind, int g_xi, int g_x) {
    EngineSum out;
    const double xi_max = 30.0 * constants::c_light / sys.gap;
    const double xi_lo = xi_max * 1e-12;
    constexpr int panels_per_decade = 4;
    const int decades = 12;

    std::vector<double> edges;
    edges.push_back(0.0);
    edges.push_back(xi_lo);
    const double step = std::pow(10.0, 1.0 / panels_per_decade);
    double e = xi_lo;
    for (int i = 0; i < decades * panels_per_decade; ++i) {
        e *= step;
        edges.push_back(std::min(e, xi_max));
    }
    edges.back() = xi_max;

    const GaussLegendreRule& rule = gauss_legendre(g_xi);
    std::vector<double> te_parts, tm_parts;
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        const double mid = 0.5 * (edges[p + 1] + edges[p]);
        if (half <= 0.0) continue;
        double s_te = 0.0, s_tm = 0.0;
        for (int i = 0; i < g_xi; ++i) {
            const double xi = mid + half * rule.nodes[i];
            const ImagAxisInterface l1(sys.material_1, xi);
            const ImagAxisInterface l2(sys.material_2, xi);
            const PolarizationSplit v = term_integral(l1, l2, xi, sys.gap, kind, g_x);
            s_te += rule.weights[i] * v.te;
            s_tm += rule.weights[i] * v.tm;
        }
        te_parts.push_back(s_te * half);
        tm_parts.push_back(s_tm * half);
    }
    out.value.te = pairwise_sum(te_parts);
    out.value.tm = pairwise_sum(tm_parts);
    return out;
}

EngineSum xi_integral(const PlateSystem& sys, const QuadratureConfig& cfg, Integrand kind) {
    const int g_xi = std::max(12, cfg.k_nodes / 2);
    EngineSum fine = xi_integral_once(sys, kind, g_xi, cfg.k_nodes);
    EngineSum coarse = xi_integral_once(sys, kind, std::max(g_xi / 2, 6),
                                        std::max(cfg.k_nodes / 2, 8));
    fine.abs_error = std::abs(fine.value.te - coarse.value.te) +
                     std::abs(fine.value.tm - coarse.value.tm);
    return fine;
}

bool has_vacuum_plate(const PlateSystem& sys) {
    return sys.material_1.is_vacuum() || sys.material_2.is_vacuum();
}

void check_temperature_positive(double T, const char* who) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::domain_error(std::string(who) + ": requires T > 0 (use the zero-temperature path for T = 0)");
}

} // namespace

PlateSystem::PlateSystem(MaterialModel m1, MaterialModel m2, double gap_m)
    : material_1(std::move(m1)), material_2(std::move(m2)), gap(gap_m) {
    if (!(gap > 0.0) || !std::isfinite(gap))
        throw std::domain_error("PlateSystem: gap must be positive and finite");
}

void QuadratureConfig::validate() const {
    if (k_nodes < 16) throw std::domain_error("QuadratureConfig: k_nodes must be >= 16");
    if (!(rel_tol > 0.0) || rel_tol > 1e-2)
        throw std::domain_error("QuadratureConfig: rel_tol must lie in (0, 1e-2]");
    if (!(temp_step_fraction > 0.0) || temp_step_fraction > 0.25)
        throw std::domain_error("QuadratureConfig: temp_step_fraction must lie in (0, 0.25]");
    if (matsubara_max < 0)
        throw std::domain_error("QuadratureConfig: matsubara_max must be >= 0");
}

double matsubara_xi(double temperature_K, long n) {
    if (!(temperature_K > 0.0))
        throw std::domain_error("matsubara_xi: requires T > 0");
    if (n < 0) throw std::domain_error("matsubara_xi: requires n >= 0");
    return 2.0 * M_PI * n * constants::k_B * temperature_K / constants::hbar;
}

FreeEnergyResult free_energy_area(const PlateSystem& sys, double temperature_K,
                                  const QuadratureConfig& cfg) {
    cfg.validate();
    check_temperature_positive(temperature_K, "free_energy_area");
    FreeEnergyResult out;
    if (has_vacuum_plate(sys)) return out;
    const EngineSum sum = matsubara_sum(sys, temperature_K, cfg, Integrand::FreeEnergy);
    const double pref =
        constants::k_B * temperature_K / (8.0 * M_PI * sys.gap * sys.gap);
    out.by_polarization.te = pref * sum.value.te;
    out.by_polarization.tm = pref * sum.value.tm;
    out.n0.te = pref * sum.n0.te;
    out.n0.tm = pref * sum.n0.tm;
    out.value = out.by_polarization.total();
    out.estimated_error = pref * sum.abs_error;
    out.matsubara_terms = sum.terms;
    return out;
}

PressureBreakdown pressure(const PlateSystem& sys, double temperature_K,
                           const QuadratureConfig& cfg) {
    cfg.validate();
    check_temperature_positive(temperature_K, "pressure");
    PressureBreakdown out;
    if (has_vacuum_plate(sys)) return out;
    const EngineSum sum = matsubara_sum(sys, temperature_K, cfg, Integrand::Pressure);
    const double pref = -constants::k_B * temperature_K /
                        (8.0 * M_PI * sys.gap * sys.gap * sys.gap);
    out.by_polarization.te = pref * sum.value.te;
    out.by_polarization.tm = pref * sum.value.tm;
    out.n0.te = pref * sum.n0.te;
    out.n0.tm = pref * sum.n0.tm;
    out.total = out.by_polarization.total();
    out.estimated_error = std::abs(pref) * sum.abs_error;
    out.matsubara_terms = sum.terms;
    return out;
}

FreeEnergyResult free_energy_zero_temperature(const PlateSystem& sys,
                                              const QuadratureConfig& cfg) {
    cfg.validate();
    FreeEnergyResult out;
    if (has_vacuum_plate(sys)) return out;
    const EngineSum sum = xi_integral(sys, cfg, Integrand::FreeEnergy);
    const double pref =
        constants::hbar / (16.0 * M_PI * M_PI * sys.gap * sys.gap);
    out.by_polarization.te = pref * sum.value.te;
    out.by_polarization.tm = pref * sum.value.tm;
    out.value = out.by_polarization.total();
    out.estimated_error = pref * sum.abs_error;
    return out;
}

PressureBreakdown pressure_zero_temperature(const PlateSystem& sys,
                                            const QuadratureConfig& cfg) {
    cfg.validate();
    PressureBreakdown out;
    if (has_vacuum_plate(sys)) return out;
    const EngineSum sum = xi_integral(sys, cfg, Integrand::Pressure);
    const double pref = -constants::hbar /
                        (16.0 * M_PI * M_PI * sys.gap * sys.gap * sys.gap);
    out.by_polarization.te = pref * sum.value.te;
    out.by_polarization.tm = pref * sum.value.tm;
    out.total = out.by_polarization.total();
    out.estimated_error = std::abs(pref) * sum.abs_error;
    return out;
}

EntropyResult entropy_area(const PlateSystem& sys, double temperature_K,
                           const QuadratureConfig& cfg) {
    cfg.validate();
    check_temperature_positive(temperature_K, "entropy_area");

    // Freeze the Matsubara truncation across the stencil: the finite
    // differences must see an F(T) that is smooth in T, not one whose
    // term count jumps between evaluations.
    QuadratureConfig frozen = cfg;
    if (frozen.matsubara_max == 0) {
        const FreeEnergyResult probe = free_energy_area(sys, temperature_K, cfg);
        frozen.matsubara_max = probe.matsubara_terms + probe.matsubara_terms / 4 + 16;
    }
    auto F = [&](double T) { return free_energy_area(sys, T, frozen).value; };

    const double h = cfg.temp_step_fraction * temperature_K;
    const double d1 = (F(temperature_K + h) - F(temperature_K - h)) / (2.0 * h);
    const double d2 = (F(temperature_K + 0.5 * h) - F(temperature_K - 0.5 * h)) / h;
    const double d4 =
        (F(temperature_K + 0.25 * h) - F(temperature_K - 0.25 * h)) / (0.5 * h);
    const double r1 = (4.0 * d2 - d1) / 3.0;
    const double r2 = (4.0 * d4 - d2) / 3.0;

    EntropyResult out;
    out.value = -r2;
    out.coarse = -r1;
    out.estimated_error = std::abs(r2 - r1);

    // scale-protected consistency gate (S may legitimately cross zero)
    const double scale = std::max(std::abs(r2),
                                  1e-2 * std::abs(F(temperature_K)) / temperature_K);
    if (out.estimated_error > 5.0 * cfg.rel_tol * std::max(scale, 1e-300))
        throw non_convergence_error("entropy_area: refinement levels disagree");
    return out;
}

ThermalCorrectionResult thermal_correction(const PlateSystem& sys, double temperature_K,
                                           const QuadratureConfig& cfg) {
    check_temperature_positive(temperature_K, "thermal_correction");
    ThermalCorrectionResult out;
    out.at_temperature = pressure(sys, temperature_K, cfg);
    out.at_zero = pressure_zero_temperature(sys, cfg);
    out.value = out.at_temperature.total - out.at_zero.total;
    out.estimated_error =
        out.at_temperature.estimated_error + out.at_zero.estimated_error;
    return out;
}

AsymptoteResult asymptote(Regime regime, const PlateSystem& sys, double temperature_K) {
    AsymptoteResult out;
    if (has_vacuum_plate(sys)) return out;
    const double d = sys.gap;
    switch (regime) {
    case Regime::NonRetarded: {
        double wp = 0.0;
        if (sys.material_1.is_plasma() || sys.material_1.is_drude())
            wp = sys.material_1.omega_p();
        else if (sys.material_2.is_plasma() || sys.material_2.is_drude())
            wp = sys.material_2.omega_p();
        else
            throw unsupported_model_error(
                "asymptote: nonretarded regime needs a plasma frequency");
        out.free_energy = -constants::hbar * wp / (d * d);
        out.pressure = -constants::hbar * wp / (d * d * d);
        return out;
    }
    case Regime::Retarded: {
        const double hc = constants::hbar * constants::c_light;
        out.free_energy = -M_PI * M_PI * hc / (720.0 * d * d * d);
        out.pressure = -M_PI * M_PI * hc / (240.0 * d * d * d * d);
        return out;
    }
    case Regime::Thermal: {
        if (!(temperature_K > 0.0))
            throw std::domain_error("asymptote: thermal regime requires T > 0");
        const double kT = constants::k_B * temperature_K;
        out.free_energy = -constants::zeta3 * kT / (8.0 * M_PI * d * d);
        out.pressure = -constants::zeta3 * kT / (4.0 * M_PI * d * d * d);
        // a Drude plate removes the static TE term: half the ideal value
        if (sys.material_1.is_drude() || sys.material_2.is_drude()) {
            out.free_energy *= 0.5;
            out.pressure *= 0.5;
        }
        return out;
    }
    }
    throw std::invalid_argument("asymptote: invalid regime");
}

ModelComparison compare_models(double gap_m, double temperature_K,
                               const MaterialModel& drude_model,
                               const QuadratureConfig& cfg) {
    if (!drude_model.is_drude())
        throw unsupported_model_error("compare_models: requires a Drude model");
    const MaterialModel plasma_model = MaterialModel::plasma(drude_model.omega_p());
    const PlateSystem sys_d(drude_model, drude_model, gap_m);
    const PlateSystem sys_p(plasma_model, plasma_model, gap_m);

    ModelComparison out;
    if (temperature_K > 0.0) {
        out.drude = pressure(sys_d, temperature_K, cfg);
        out.plasma = pressure(sys_p, temperature_K, cfg);
    } else {
        out.drude = pressure_zero_temperature(sys_d, cfg);
        out.plasma = pressure_zero_temperature(sys_p, cfg);
    }
    out.difference = out.drude.total - out.plasma.total;
    out.plasma_n0_te = out.plasma.n0.te;
    return out;
}

} // namespace casimir
