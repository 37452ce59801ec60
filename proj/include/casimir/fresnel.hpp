// Single-interface reflection amplitudes for a vacuum/metal boundary,
// at real frequency (propagating and evanescent sectors) and on the
// imaginary frequency axis. Nonmagnetic media (mu = 1) throughout.
//
// Branch convention: the axial wavevector in the medium,
//   k_zm = sqrt(i mu0 omega sigma(omega) + k_z^2),  k_z^2 = omega^2/c^2 - k_par^2,
// is taken with Im k_zm >= 0 (decay into the medium); when the root is
// purely real the sign is fixed to Re k_zm >= 0.
#ifndef CASIMIR_FRESNEL_HPP
#define CASIMIR_FRESNEL_HPP

#include <complex>

#include "casimir/materials.hpp"

namespace casimir {

enum class Polarization { TE, TM };

// Vacuum axial wavevector: real sqrt(omega^2/c^2 - k_par^2) when
// propagating, i*sqrt(k_par^2 - omega^2/c^2) when evanescent.
std::complex<double> axial_vacuum(double omega, double k_par);

// Medium axial wavevector at real or complex frequency, branch above.
// Unsupported for perfect conductors.
std::complex<double> axial_medium(const MaterialModel& m, std::complex<double> omega,
                                  double k_par);

// r_s = (k_z - k_zm)/(k_z + k_zm); perfect conductor -> -1 exactly.
std::complex<double> reflection_te(const MaterialModel& m, double omega, double k_par);

// r_p = (eps k_z - k_zm)/(eps k_z + k_zm); perfect conductor -> +1 exactly.
// At omega = 0 the metallic |eps| -> infinity limit (+1) is hard-coded.
std::complex<double> reflection_tm(const MaterialModel& m, double omega, double k_par);

// Same amplitudes at complex frequency (analytic continuation).
std::complex<double> reflection(const MaterialModel& m, std::complex<double> omega,
                                double k_par, Polarization pol);

// Both polarizations in one pass (k_z, k_zm and eps computed once);
// the hot path of the real-frequency integrators.
void reflection_pair(const MaterialModel& m, double omega, double k_par,
                     std::complex<double>& r_te, std::complex<double>& r_tm);

// Real-valued reflection amplitude at omega = i xi, the Matsubara
// integration axis: with q = sqrt(xi^2/c^2 + k_par^2) and
// kappa_m = sqrt(eps(i xi) xi^2/c^2 + k_par^2),
//   TE: (q - kappa_m)/(q + kappa_m),  TM: (eps q - kappa_m)/(eps q + kappa_m).
// The xi = 0 limits are hard-coded per model and polarization: this term
// carries the entire static (n = 0) physics and must not depend on
// floating-point luck.
//   perfect:      TE -1, TM +1
//   vacuum:       0
//   Drude:        TE  0, TM +1   (transparent to static magnetic fields)
//   plasma:       TE (k - sqrt(k^2 + omega_p^2/c^2))/(k + sqrt(...)), TM +1
double reflection_imag_axis(const MaterialModel& m, double xi, double k_par,
                            Polarization pol);

// Surface plasmon polariton frequency of a lossless plasma half-space:
// the root of eps(omega) k_z + k_zm = 0 in the evanescent TM sector,
// omega in (0, omega_p/sqrt(2)), by bracketed root search.
double surface_plasmon_frequency(const MaterialModel& plasma_model, double k_par);

// Imaginary-axis response of one interface with eps(i xi) precomputed,
// for the Matsubara hot loop. reflection_imag_axis delegates here, so the
// two paths cannot drift apart. q = sqrt(xi^2/c^2 + k_par^2); k_par is
// needed separately only for the xi = 0 plasma TE limit.
class ImagAxisInterface {
  public:
    ImagAxisInterface(const MaterialModel& m, double xi);
    double te(double q, double k_par) const;
    double tm(double q, double k_par) const;

  private:
    enum class Kind { Perfect, Vacuum, Metal, StaticDrude, StaticPlasma };
    Kind kind_;
    double eps_ = 1.0;       // eps(i xi)
    double shift_ = 0.0;     // (eps - 1) xi^2/c^2, so kappa_m = sqrt(q^2 + shift)
    double wp_over_c_ = 0.0; // static plasma TE screening scale
};

} // namespace casimir

#endif
