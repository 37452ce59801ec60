#include "casimir/spectral.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/scales.hpp"

namespace casimir {

namespace {

using complexd = std::complex<double>;
using namespace std::complex_literals;

constexpr double kPoleGuard = 1e-12;

struct FPair {
    complexd te, tm;
};

bool same_material(const MaterialModel& a, const MaterialModel& b) {
    if (a.is_perfect_conductor()) return b.is_perfect_conductor();
    if (a.is_vacuum()) return b.is_vacuum();
    if (a.is_plasma()) return b.is_plasma() && a.omega_p() == b.omega_p();
    return b.is_drude() && a.omega_p() == b.omega_p() && a.tau() == b.tau();
}

// r1 r2 * phase for both polarizations; k_par fixed by the contour,
// k_par^2 = omega^2/c^2 - k_z^2.
FPair roundtrip_product(const PlateSystem& sys, double omega, complexd phase,
                        double k_par) {
    complexd te1, tm1, te2, tm2;
    reflection_pair(sys.material_1, omega, k_par, te1, tm1);
    if (same_material(sys.material_1, sys.material_2)) {
        te2 = te1;
        tm2 = tm1;
    } else {
        reflection_pair(sys.material_2, omega, k_par, te2, tm2);
    }
    return {te1 * te2 * phase, tm1 * tm2 * phase};
}

complexd close_loop(complexd x, bool nudge_poles) {
    complexd den = 1.0 - x;
    const double guard = kPoleGuard * (1.0 + std::abs(x));
    if (std::abs(den) < guard) {
        if (!nudge_poles) throw pole_error("roundtrip_factor: cavity resonance pole");
        den = den == 0.0 ? complexd(guard, 0.0) : den * (guard / std::abs(den));
    }
    return x / den;
}

FPair roundtrip_raw(const PlateSystem& sys, double omega, complexd k_z, double k_par,
                    bool nudge_poles) {
    const complexd phase = std::exp(2.0i * k_z * sys.gap);
    const FPair p = roundtrip_product(sys, omega, phase, k_par);
    return {close_loop(p.te, nudge_poles), close_loop(p.tm, nudge_poles)};
}

double vacuum_k_par(double omega, complexd k_z) {
    const double koc = omega / constants::c_light;
    const complexd kp2 = koc * koc - k_z * k_z;
    if (std::abs(kp2.imag()) > 1e-9 * (std::abs(kp2) + 1.0))
        throw std::domain_error("roundtrip_factor: k_z off the physical contour");
    return std::sqrt(std::max(kp2.real(), 0.0));
}

bool any_plasma(const PlateSystem& sys) {
    return sys.material_1.is_plasma() || sys.material_2.is_plasma();
}
bool any_vacuum(const PlateSystem& sys) {
    return sys.material_1.is_vacuum() || sys.material_2.is_vacuum();
}
bool both_perfect(const PlateSystem& sys) {
    return sys.material_1.is_perfect_conductor() && sys.material_2.is_perfect_conductor();
}

// Smallest omega_p among metallic plates, 0 if none.
double min_omega_p(const PlateSystem& sys) {
    double wp = 0.0;
    for (const MaterialModel* m : {&sys.material_1, &sys.material_2}) {
        if (m->is_plasma() || m->is_drude())
            wp = wp == 0.0 ? m->omega_p() : std::min(wp, m->omega_p());
    }
    return wp;
}

// ---------------------------------------------------------------------
// adaptive Gauss-Kronrod for small fixed-size vector integrands, driven
// by the error of the component sum; deterministic recursion order
// ---------------------------------------------------------------------

constexpr double kKNodes[8] = {0.991455371120813, 0.949107912342759,
                               0.864864423359769, 0.741531185599394,
                               0.586087235467691, 0.405845151377397,
                               0.207784955007898, 0.0};
constexpr double kKWeights[8] = {0.022935322010529, 0.063092092629979,
                                 0.104790010322250, 0.140653259715525,
                                 0.169004726639267, 0.190350578064785,
                                 0.204432940075298, 0.209482141084728};
constexpr double kGWeights[4] = {0.129484966168870, 0.279705391489277,
                                 0.381830050505119, 0.417959183673469};

template <size_t N>
struct VecQuad {
    std::array<double, N> parts{};
    double total = 0.0;
    double err = 0.0;
    long evals = 0;
};

template <size_t N>
void gk15_vec(const std::function<void(double, std::array<double, N>&)>& f, double a,
              double b, VecQuad<N>& out) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    std::array<double, N> acc{};
    double kron = 0.0, gauss = 0.0;
    std::array<double, N> val{};
    for (int i = 0; i < 15; ++i) {
        const int j = i < 8 ? i : 14 - i;
        const double x = mid + (i < 8 ? -1.0 : 1.0) * h * kKNodes[j];
        f(x, val);
        double sum = 0.0;
        for (size_t c = 0; c < N; ++c) sum += val[c];
        kron += kKWeights[j] * sum;
        const bool gauss_node = (j % 2) == 1 || j == 7;
        if (gauss_node) gauss += kGWeights[j / 2] * sum;
        for (size_t c = 0; c < N; ++c) acc[c] += kKWeights[j] * val[c];
    }
    out.parts = acc;
    for (size_t c = 0; c < N; ++c) out.parts[c] *= h;
    out.total = kron * h;
    out.err = std::abs((kron - gauss) * h);
    out.evals = 15;
}

template <size_t N>
void integrate_vec(const std::function<void(double, std::array<double, N>&)>& f, double a,
                   double b, double abs_floor, int depth, VecQuad<N>& out) {
    VecQuad<N> whole;
    gk15_vec(f, a, b, whole);
    out.evals += whole.evals;
    if (depth <= 0 || whole.err <= abs_floor) {
        for (size_t c = 0; c < N; ++c) out.parts[c] += whole.parts[c];
        out.total += whole.total;
        out.err += whole.err;
        return;
    }
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) {
        for (size_t c = 0; c < N; ++c) out.parts[c] += whole.parts[c];
        out.total += whole.total;
        out.err += whole.err;
        return;
    }
    integrate_vec(f, a, mid, 0.5 * abs_floor, depth - 1, out);
    integrate_vec(f, mid, b, 0.5 * abs_floor, depth - 1, out);
}

// ---------------------------------------------------------------------
// inner (fixed-omega) sector integrals; the near-unity passes of the
// round trip are handled by resonant_loop_integral (pole subtraction)
// ---------------------------------------------------------------------

struct Inner {
    double prop_te = 0.0, prop_tm = 0.0; // int k_z^2 Re f dk_z over [0, w/c]
    double evan_te = 0.0, evan_tm = 0.0; // int kap^2 Im f dkap over (0, inf)
    double err = 0.0;
    long evals = 0;
};

Inner inner_integrals(const PlateSystem& sys, double omega, double rel_tol) {
    Inner out;
    const double d = sys.gap;
    const double koc = omega / constants::c_light;
    const double wp = min_omega_p(sys);

    // --- propagating sector: k_z in (0, omega/c). Reflectivity survives
    //     above the transparency edge in the grazing stripe
    //     k_z < omega_p/c (total internal reflection off the optically
    //     thinner metal), where the TIR phase -4 atan(|k_zm|/k_z) makes
    //     the resonances cluster toward the band edge. Substituting
    //     k_z = (omega_p/c) sin(sigma) turns that phase into 4 sigma,
    //     so in sigma the resonances are evenly spread and the pole
    //     hunt cannot lose them. For omega <= omega_p the whole range
    //     is the band; the remainder above the edge is smooth.
    {
        auto x_of_k = [&](double kz, bool tm) {
            const double k_par = std::sqrt(std::max((koc - kz) * (koc + kz), 0.0));
            const FPair p = roundtrip_product(
                sys, omega, std::exp(2.0i * complexd(kz, 0.0) * d), k_par);
            return tm ? p.tm : p.te;
        };
        const double edge = wp > 0.0 ? wp / constants::c_light : koc;
        const double k_band = std::min(koc, edge);
        // the resonant band keeps a fixed scale (omega_p/c)^3 while the
        // full range grows as omega^3; the floor must follow the band
        // or the stripe signal drowns at high frequency
        const double floor = rel_tol * k_band * k_band * k_band / 3.0 / 8.0;

        // resonant band, parametrized by sigma
        if (k_band > 0.0) {
            const double smax = k_band >= edge ? M_PI_2 : std::asin(k_band / edge);
            auto k_of_s = [&](double s) { return edge * std::sin(s); };
            auto w_of_s = [&](double s) {
                const double k = k_of_s(s);
                return k * k * edge * std::cos(s);
            };
            // phase span ~ 2 d k_band + 4 smax
            const double span = 2.0 * d * k_band + 4.0 * smax;
            const long periods = std::max<long>(1, std::lround(span / (2.0 * M_PI)) + 1);
            std::vector<double> edges;
            for (long i = 0; i <= periods; ++i)
                edges.push_back(smax * static_cast<double>(i) / periods);
            const long n = std::min<long>(32 * periods, 30000);
            std::vector<double> scan(n + 1);
            for (long i = 0; i <= n; ++i)
                scan[i] = smax * static_cast<double>(i) / n;

            for (bool tm : {false, true}) {
                auto x_of_s = [&](double s) { return x_of_k(k_of_s(s), tm); };
                const ResonantLoopResult r =
                    resonant_loop_integral(x_of_s, w_of_s, edges, scan, false, floor);
                (tm ? out.prop_tm : out.prop_te) += r.value;
                out.err += r.abs_error;
                out.evals += r.evals;
            }
        }

        // above the TIR edge: moderate reflectivity; a thin window past
        // the edge can still hold a resonance (|r| falls like sqrt)
        if (koc > k_band) {
            auto weight = [](double kz) { return kz * kz; };
            std::vector<double> edges;
            edges.push_back(k_band);
            const double spacing = M_PI / d;
            for (double k = spacing * (std::floor(k_band / spacing) + 1.0);
                 k < koc * (1.0 - 1e-12); k += spacing)
                edges.push_back(k);
            edges.push_back(koc);
            const double scan_hi = std::min(koc, k_band * 1.05);
            std::vector<double> scan;
            if (scan_hi > k_band) {
                scan.resize(257);
                for (int i = 0; i <= 256; ++i)
                    scan[i] = k_band + (scan_hi - k_band) * i / 256.0;
            }
            for (bool tm : {false, true}) {
                auto xf = [&](double kz) { return x_of_k(kz, tm); };
                const ResonantLoopResult r =
                    resonant_loop_integral(xf, weight, edges, scan, false, floor);
                (tm ? out.prop_tm : out.prop_te) += r.value;
                out.err += r.abs_error;
                out.evals += r.evals;
            }
        }
    }

    // --- evanescent sector: kappa in (0, 32/d]; coupled surface modes
    //     put near-unity passes in the TM round trip below the
    //     single-interface ceiling
    {
        const double kap_lo = 1e-6 / d;
        const double kap_hi = 32.0 / d;
        auto x_te = [&](double kap) {
            const double k_par = std::hypot(koc, kap);
            return roundtrip_product(sys, omega,
                                     complexd(std::exp(-2.0 * kap * d), 0.0), k_par)
                .te;
        };
        auto x_tm = [&](double kap) {
            const double k_par = std::hypot(koc, kap);
            return roundtrip_product(sys, omega,
                                     complexd(std::exp(-2.0 * kap * d), 0.0), k_par)
                .tm;
        };
        auto weight = [](double kap) { return kap * kap; };

        std::vector<double> edges;
        for (double k = kap_lo; k < kap_hi; k *= std::pow(10.0, 1.0 / 6.0))
            edges.push_back(k);
        edges.push_back(kap_hi);
        // diffusive ridge kappa ~ sqrt(omega/D) for Drude plates
        for (const MaterialModel* m : {&sys.material_1, &sys.material_2}) {
            if (m->is_drude()) {
                const double kd = std::sqrt(omega / magnetic_diffusivity(*m));
                for (double fac : {0.5, 1.0, 2.0}) {
                    const double k = kd * fac;
                    if (k > kap_lo && k < kap_hi) edges.push_back(k);
                }
            }
        }
        std::sort(edges.begin(), edges.end());

        std::vector<double> scan_tm;
        if (wp > 0.0 && omega < 0.98 * wp && !both_perfect(sys)) {
            const int n = 300;
            scan_tm.resize(n + 1);
            for (int i = 0; i <= n; ++i)
                scan_tm[i] =
                    kap_lo * std::pow(kap_hi / kap_lo, static_cast<double>(i) / n);
            // single-interface surface-mode ridge: the funnel in
            // |1 - x_tm| is only as wide as the mode linewidth, so the
            // base grid needs a dense patch around the lossless-
            // dispersion kappa*(omega) where Re eps < -1
            double eps_re = 0.0;
            for (const MaterialModel* m : {&sys.material_1, &sys.material_2}) {
                if (m->is_plasma() || m->is_drude())
                    eps_re = std::min(
                        eps_re,
                        permittivity(*m, complexd(omega, 0.0)).real());
            }
            if (eps_re < -1.0) {
                const double k2 =
                    (omega * omega / (constants::c_light * constants::c_light)) *
                    eps_re / (1.0 + eps_re);
                const double kap2 =
                    k2 - omega * omega / (constants::c_light * constants::c_light);
                if (kap2 > 0.0) {
                    const double kap_star = std::sqrt(kap2);
                    if (kap_star > kap_lo && kap_star < kap_hi) {
                        for (int i = 0; i <= 192; ++i)
                            scan_tm.push_back(kap_star *
                                              std::pow(1.3 / 0.77, i / 192.0) * 0.77);
                        std::sort(scan_tm.begin(), scan_tm.end());
                        for (double fac : {0.9, 1.0, 1.1}) {
                            const double e = kap_star * fac;
                            if (e > kap_lo && e < kap_hi) edges.push_back(e);
                        }
                        std::sort(edges.begin(), edges.end());
                    }
                }
            }
        }

        const double floor =
            rel_tol / (d * d * d) / std::max<size_t>(edges.size(), 1);
        const ResonantLoopResult te = resonant_loop_integral(
            x_te, weight, edges, std::span<const double>{}, true, floor);
        const ResonantLoopResult tm =
            resonant_loop_integral(x_tm, weight, edges, scan_tm, true, floor);
        out.evan_te = te.value;
        out.evan_tm = tm.value;
        out.err += te.abs_error + tm.abs_error;
        out.evals += te.evals + tm.evals;
    }
    return out;
}

// ---------------------------------------------------------------------
// ideal-mirror exact path: cavity mode sum minus continuum
// ---------------------------------------------------------------------

// S(floor(u)) - u^3/3 with S(m) = sum_{j<=m} j^2
double staircase_minus_continuum(double u) {
    const double m = std::floor(u);
    const double S = m * (m + 1.0) * (2.0 * m + 1.0) / 6.0;
    return S - u * u * u / 3.0;
}

// A(eta) = int_0^inf [S(floor u) - u^3/3] e^{-eta u} du by unit panels.
double abel_integral(double eta) {
    const double u_max = 45.0 / eta;
    const GaussLegendreRule& rule = gauss_legendre(12);
    double sum = 0.0;
    std::vector<double> parts;
    parts.reserve(static_cast<size_t>(u_max) + 1);
    for (double a = 0.0; a < u_max; a += 1.0) {
        const double b = a + 1.0;
        double s = 0.0;
        for (int i = 0; i < 12; ++i) {
            const double u = 0.5 * (a + b) + 0.5 * rule.nodes[i];
            s += rule.weights[i] * staircase_minus_continuum(u) * std::exp(-eta * u);
        }
        parts.push_back(0.5 * s);
    }
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) sum += *it;
    return sum;
}

PressureBreakdown pressure_real_axis_ideal(const PlateSystem& sys, double T) {
    const double d = sys.gap;
    const double hbar = constants::hbar;
    const double c = constants::c_light;
    const double pref = hbar * c * M_PI * M_PI / (d * d * d * d);

    // zero point: Abel-regularized, Richardson in eta^2
    const double a1 = abel_integral(0.04);
    const double a2 = abel_integral(0.02);
    const double abel = (4.0 * a2 - a1) / 3.0;
    const double p_zp = 0.5 * pref * abel;
    const double abel_err = std::abs(a2 - a1) / 3.0 * 0.5 * pref;

    // thermal: absolutely convergent staircase integral
    double p_th = 0.0, th_err = 0.0;
    if (T > 0.0) {
        const double omega_scale = M_PI * c / d; // omega = u * omega_scale
        const double u_th = 45.0 * constants::k_B * T / (hbar * omega_scale);
        auto f = [&](double u) {
            if (u <= 0.0) return 0.0;
            return bose_occupation(u * omega_scale, T) * staircase_minus_continuum(u);
        };
        double sum = 0.0, sum_coarse = 0.0;
        for (double a = 0.0; a < u_th; a += 1.0) {
            const double b = std::min(a + 1.0, std::ceil(u_th));
            sum += gl_integrate(f, a, b, 24);
            sum_coarse += gl_integrate(f, a, b, 12);
        }
        p_th = pref * sum;
        th_err = pref * std::abs(sum - sum_coarse);
    }

    PressureBreakdown out;
    out.total = p_zp + p_th;
    out.by_polarization.te = 0.5 * out.total;
    out.by_polarization.tm = 0.5 * out.total;
    out.estimated_error = abel_err + th_err;
    return out;
}

} // namespace

// ---------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------

RoundTrip roundtrip_factor(const PlateSystem& sys, double omega, complexd k_z) {
    if (omega < 0.0) throw std::domain_error("roundtrip_factor: omega < 0");
    const double k_par = vacuum_k_par(omega, k_z);
    const FPair fp = roundtrip_raw(sys, omega, k_z, k_par, false);
    return {fp.te, fp.tm};
}

double mode_density(const PlateSystem& sys, double omega, double kappa,
                    Polarization pol) {
    if (!(kappa > 0.0)) throw std::domain_error("mode_density: requires kappa > 0");
    if (omega < 0.0) throw std::domain_error("mode_density: omega < 0");
    const double k_par = std::hypot(omega / constants::c_light, kappa);
    const FPair fp = roundtrip_raw(sys, omega, complexd(0.0, kappa), k_par, false);
    const complexd f = pol == Polarization::TE ? fp.te : fp.tm;
    // kappa * Re[2 hbar (i kappa) f]
    return -2.0 * constants::hbar * kappa * kappa * f.imag();
}

SpectralMap spectral_map(const PlateSystem& sys, std::span<const double> omega_grid,
                         std::span<const double> kappa_grid) {
    if (omega_grid.size() < 2 || kappa_grid.size() < 2)
        throw std::domain_error("spectral_map: grids need at least 2 points");
    SpectralMap map;
    map.omega_grid.assign(omega_grid.begin(), omega_grid.end());
    map.kappa_grid.assign(kappa_grid.begin(), kappa_grid.end());
    const size_t nw = omega_grid.size(), nk = kappa_grid.size();
    map.te.assign(nw * nk, 0.0);
    map.tm.assign(nw * nk, 0.0);
    map.sum.assign(nw * nk, 0.0);
    map.kappa_cutoff = 1.0 / sys.gap;

    bool drude = sys.material_1.is_drude() || sys.material_2.is_drude();
    if (drude) {
        const MaterialModel& m =
            sys.material_1.is_drude() ? sys.material_1 : sys.material_2;
        const double D = magnetic_diffusivity(m);
        map.has_diffusion_curve = true;
        map.diffusion_curve.reserve(nk);
        for (double k : kappa_grid) map.diffusion_curve.push_back(D * k * k);
    }

    double best = -1e300;
    for (size_t i = 0; i < nw; ++i) {
        for (size_t j = 0; j < nk; ++j) {
            const size_t idx = i * nk + j;
            try {
                const double v_te =
                    mode_density(sys, omega_grid[i], kappa_grid[j], Polarization::TE);
                const double v_tm =
                    mode_density(sys, omega_grid[i], kappa_grid[j], Polarization::TM);
                map.te[idx] = v_te;
                map.tm[idx] = v_tm;
                map.sum[idx] = v_te + v_tm;
                if (map.sum[idx] > best) {
                    best = map.sum[idx];
                    map.argmax_omega = omega_grid[i];
                    map.argmax_kappa = kappa_grid[j];
                }
            } catch (const pole_error& e) {
                map.te[idx] = map.tm[idx] = map.sum[idx] =
                    std::numeric_limits<double>::quiet_NaN();
                map.cell_errors.push_back("cell (" + std::to_string(i) + "," +
                                          std::to_string(j) + "): " + e.what());
            }
        }
    }
    map.max_value = best;
    return map;
}

std::vector<double> default_omega_grid(const PlateSystem& sys, int n) {
    if (n < 2) throw std::domain_error("default_omega_grid: n >= 2");
    double lo, hi;
    if (sys.material_1.is_drude() || sys.material_2.is_drude()) {
        const MaterialModel& m =
            sys.material_1.is_drude() ? sys.material_1 : sys.material_2;
        lo = 1e-3 / m.tau();
        hi = 1e2 / m.tau();
    } else {
        const double wd = constants::c_light / sys.gap;
        lo = 1e-3 * wd;
        hi = 1e2 * wd;
    }
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return grid;
}

std::vector<double> default_kappa_grid(const PlateSystem& sys, int n) {
    if (n < 2) throw std::domain_error("default_kappa_grid: n >= 2");
    const double lo = 1e-2 / sys.gap, hi = 1e2 / sys.gap;
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return grid;
}

double SpectrumRecord::total() const {
    double s = 0.0;
    for (int w = 0; w < 2; ++w)
        for (int p = 0; p < 2; ++p)
            for (int e = 0; e < 2; ++e) s += part[w][p][e];
    return s;
}
double SpectrumRecord::zero_point() const {
    return part[0][0][0] + part[0][0][1] + part[0][1][0] + part[0][1][1];
}
double SpectrumRecord::thermal() const {
    return part[1][0][0] + part[1][0][1] + part[1][1][0] + part[1][1][1];
}

SpectrumRecord pressure_spectrum(const PlateSystem& sys, double temperature_K,
                                 double omega, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(omega > 0.0)) throw std::domain_error("pressure_spectrum: requires omega > 0");
    if (temperature_K < 0.0)
        throw std::domain_error("pressure_spectrum: negative temperature");
    if (any_plasma(sys))
        throw non_convergence_error(
            "pressure_spectrum: lossless plasma has bound modes on the real axis; "
            "use the Matsubara engine");

    SpectrumRecord rec;
    rec.omega = omega;
    if (any_vacuum(sys)) return rec;

    const double w_zp = 0.5;
    const double w_th = temperature_K > 0.0 ? bose_occupation(omega, temperature_K) : 0.0;
    const double pref = constants::hbar / (M_PI * M_PI);

    double prop_te, prop_tm, evan_te, evan_tm;
    if (both_perfect(sys)) {
        // Re f = -1/2 pointwise away from the cavity poles; the delta
        // comb on the poles is carried by pressure_real_axis only.
        const double koc = omega / constants::c_light;
        prop_te = prop_tm = -koc * koc * koc / 6.0;
        evan_te = evan_tm = 0.0;
    } else {
        const Inner in =
            inner_integrals(sys, omega, std::clamp(cfg.rel_tol * 10.0, 1e-9, 1e-4));
        prop_te = in.prop_te;
        prop_tm = in.prop_tm;
        evan_te = in.evan_te;
        evan_tm = in.evan_tm;
    }

    rec.part[0][0][0] = pref * w_zp * prop_te;
    rec.part[0][1][0] = pref * w_zp * prop_tm;
    rec.part[0][0][1] = -pref * w_zp * evan_te;
    rec.part[0][1][1] = -pref * w_zp * evan_tm;
    rec.part[1][0][0] = pref * w_th * prop_te;
    rec.part[1][1][0] = pref * w_th * prop_tm;
    rec.part[1][0][1] = -pref * w_th * evan_te;
    rec.part[1][1][1] = -pref * w_th * evan_tm;
    return rec;
}

PressureBreakdown pressure_real_axis(const PlateSystem& sys, double temperature_K,
                                     const QuadratureConfig& cfg) {
    cfg.validate();
    if (temperature_K < 0.0)
        throw std::domain_error("pressure_real_axis: negative temperature");
    PressureBreakdown out;
    if (any_vacuum(sys)) return out;
    if (any_plasma(sys))
        throw non_convergence_error(
            "pressure_real_axis: lossless plasma has bound modes on the real axis; "
            "use the Matsubara engine");
    if (both_perfect(sys)) return pressure_real_axis_ideal(sys, temperature_K);

    const double d = sys.gap;
    const double c = constants::c_light;
    const double wp = min_omega_p(sys);
    double tau = 0.0;
    for (const MaterialModel* m : {&sys.material_1, &sys.material_2})
        if (m->is_drude()) tau = tau == 0.0 ? m->tau() : std::max(tau, m->tau());

    const double w_hi = 50.0 * std::max(wp, c / d);
    double w_lo = std::min(c / d, wp);
    if (tau > 0.0) w_lo = std::min(w_lo, 1.0 / tau);
    if (temperature_K > 0.0)
        w_lo = std::min(w_lo, constants::k_B * temperature_K / constants::hbar);
    w_lo *= 1e-6;

    // panel edges: geometric background plus every structure scale
    std::vector<double> edges;
    for (double w = w_lo; w < w_hi; w *= std::pow(10.0, 0.25)) edges.push_back(w);
    edges.push_back(w_hi);
    const double spacing = M_PI * c / d;
    for (double w = spacing; w < w_hi; w += spacing) edges.push_back(w);
    if (wp > 0.0) {
        for (double f : {1.0 / std::sqrt(2.0), 1.0, 2.0}) {
            const double w = wp * f;
            if (w > w_lo && w < w_hi) edges.push_back(w);
        }
    }
    if (tau > 0.0 && 1.0 / tau > w_lo && 1.0 / tau < w_hi) edges.push_back(1.0 / tau);
    if (temperature_K > 0.0) {
        const double wt = 45.0 * constants::k_B * temperature_K / constants::hbar;
        if (wt > w_lo && wt < w_hi) edges.push_back(wt);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](double a, double b) { return b <= a * (1.0 + 1e-12); }),
                edges.end());

    // cross-check engine: inner/outer tolerances sized for the 1%/5%
    // agreement contract, not for cfg.rel_tol
    const double inner_tol = std::clamp(cfg.rel_tol, 1e-9, 1e-4);
    // index [w][pol][sector] flattened as w*4 + pol*2 + sector
    auto f = [&](double w, std::array<double, 8>& val) {
        const Inner in = inner_integrals(sys, w, inner_tol);
        const double w_zp = 0.5;
        const double w_th =
            temperature_K > 0.0 ? bose_occupation(w, temperature_K) : 0.0;
        val[0] = w_zp * in.prop_te;
        val[1] = -w_zp * in.evan_te;
        val[2] = w_zp * in.prop_tm;
        val[3] = -w_zp * in.evan_tm;
        val[4] = w_th * in.prop_te;
        val[5] = -w_th * in.evan_te;
        val[6] = w_th * in.prop_tm;
        val[7] = -w_th * in.evan_tm;
    };

    // coarse scan to set the absolute refinement floor
    double scale = 0.0;
    {
        std::array<double, 8> v{};
        for (size_t i = 0; i + 1 < edges.size(); i += std::max<size_t>(edges.size() / 24, 1)) {
            const double w = std::sqrt(edges[i] * edges[i + 1]);
            f(w, v);
            double s = 0.0;
            for (double x : v) s += std::abs(x);
            scale = std::max(scale, s * (edges[i + 1] - edges[i]));
        }
    }

    const double floor = std::max(scale, 1e-300) *
                         std::clamp(cfg.rel_tol, 1e-9, 1e-3) /
                         std::max<size_t>(edges.size(), 1);

    // outer panels are independent; fan out and reduce in panel order
    const size_t n_panels = edges.size() - 1;
    std::vector<VecQuad<8>> panel_results(n_panels);
    {
        const unsigned workers =
            std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
        std::atomic<size_t> next{0};
        auto work = [&]() {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= n_panels) return;
                integrate_vec<8>(f, edges[i], edges[i + 1], floor, 8,
                                 panel_results[i]);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
        for (std::thread& t : pool) t.join();
    }
    VecQuad<8> acc;
    for (const VecQuad<8>& r : panel_results) {
        for (size_t c8 = 0; c8 < 8; ++c8) acc.parts[c8] += r.parts[c8];
        acc.err += r.err;
        acc.evals += r.evals;
    }

    const double pref = constants::hbar / (M_PI * M_PI);
    out.by_polarization.te = pref * (acc.parts[0] + acc.parts[1] + acc.parts[4] + acc.parts[5]);
    out.by_polarization.tm = pref * (acc.parts[2] + acc.parts[3] + acc.parts[6] + acc.parts[7]);
    out.total = out.by_polarization.total();
    out.estimated_error = pref * acc.err;
    return out;
}

} // namespace casimir
