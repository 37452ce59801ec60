// Real-frequency, mode-resolved diagnostics: the cavity round-trip
// factor, the evanescent mode-density map, per-frequency pressure
// spectra split by polarization and sector, and a real-axis evaluation
// of the pressure that cross-checks the Matsubara engine.
//
// The real-axis form used here is the contour-rotation inverse of the
// Matsubara sum,
//
//   P = (hbar/pi^2) int_0^inf dw [1/2 + n(w,T)]
//         [ int_0^{w/c} k_z^2 sum_pol Re f dk_z  -  int_0^inf kap^2 sum_pol Im f dkap ],
//
// f = r1 r2 e^{2 i k_z d} / (1 - r1 r2 e^{2 i k_z d}), evanescent k_z = i kap.
// For ideal mirrors Re f = -1/2 plus a delta comb on the cavity modes
// k_z = m pi/d; that sector is integrated exactly (mode sum minus
// continuum) with an Abel regularizer extrapolated to zero.
#ifndef CASIMIR_SPECTRAL_HPP
#define CASIMIR_SPECTRAL_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "casimir/fresnel.hpp"
#include "casimir/lifshitz.hpp"

namespace casimir {

struct RoundTrip {
    std::complex<double> te;
    std::complex<double> tm;
};

// f per polarization at complex axial wavevector k_z. Throws pole_error
// within machine distance of a resonance denominator zero (ideal mirrors
// at cavity modes).
RoundTrip roundtrip_factor(const PlateSystem& sys, double omega,
                           std::complex<double> k_z);

// Evanescent mode density, the plotted map quantity:
//   value = kappa * Re[ 2 hbar (i kappa) f(omega, i kappa) ]   (J s / m^2)
// Zero for ideal mirrors (f is real there).
double mode_density(const PlateSystem& sys, double omega, double kappa,
                    Polarization pol);

struct SpectralMap {
    std::vector<double> omega_grid; // rad/s
    std::vector<double> kappa_grid; // 1/m
    // row-major [omega][kappa]
    std::vector<double> te, tm, sum;
    double kappa_cutoff = 0.0;           // 1/d overlay
    std::vector<double> diffusion_curve; // omega = D kappa^2 on kappa_grid (Drude)
    bool has_diffusion_curve = false;
    std::vector<std::string> cell_errors; // per-cell pole reports, not fatal

    double max_value = 0.0; // of sum
    double argmax_omega = 0.0;
    double argmax_kappa = 0.0;
};

SpectralMap spectral_map(const PlateSystem& sys, std::span<const double> omega_grid,
                         std::span<const double> kappa_grid);

// Default log-spaced grids bracketing the diffusive and cavity features:
// omega in [1e-3, 1e2]/tau (Drude) and kappa in [1e-2, 1e2]/d.
std::vector<double> default_omega_grid(const PlateSystem& sys, int n = 200);
std::vector<double> default_kappa_grid(const PlateSystem& sys, int n = 200);

// Per-omega pressure integrand dP/domega (Pa s), split into
// {zero-point, thermal} x {TE, TM} x {propagating, evanescent}.
struct SpectrumRecord {
    double omega = 0.0;
    // [zero_point=0 / thermal=1][te=0 / tm=1][prop=0 / evan=1]
    double part[2][2][2] = {};
    bool converged = true;

    double total() const;
    double zero_point() const;
    double thermal() const;
};
SpectrumRecord pressure_spectrum(const PlateSystem& sys, double temperature_K,
                                 double omega, const QuadratureConfig& cfg = {});

// Real-axis pressure (cross-engine validator for the Matsubara path).
// Supported for perfect-conductor, Drude, vacuum and mixed
// perfect/Drude plates. The lossless plasma puts bound surface-plasmon
// poles on the integration path and is rejected with
// non_convergence_error.
PressureBreakdown pressure_real_axis(const PlateSystem& sys, double temperature_K,
                                     const QuadratureConfig& cfg = {});

} // namespace casimir

#endif
