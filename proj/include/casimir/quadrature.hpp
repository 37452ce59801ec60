// Quadrature building blocks: cached Gauss-Legendre rules for the fixed
// panel schemes of the Matsubara engine, an adaptive Gauss-Kronrod 7/15
// integrator for the real-frequency diagnostics, and a finite-interval
// tanh-sinh rule for panels whose endpoints sit on a resonance.
#ifndef CASIMIR_QUADRATURE_HPP
#define CASIMIR_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace casimir {

struct GaussLegendreRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

// Nodes/weights for order n, computed once and cached (thread-safe).
const GaussLegendreRule& gauss_legendre(int n);

// Integrate f over [a, b] with an n-point Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n);

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;   // estimate
    long evaluations = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod 7/15 over [a, b]; subdivides worst intervals
// until |error| <= max(rel_tol*|value|, abs_tol) or the interval budget
// runs out (converged = false then).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double rel_tol, double abs_tol,
                                    int max_intervals = 2000);

// Adaptive integration over a pre-split panel chain; panel edges must be
// increasing. Useful when the integrand has known structure points.
QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  std::span<const double> edges, double rel_tol,
                                  double abs_tol, int max_intervals_per_panel = 400);

// Finite-interval tanh-sinh (double exponential) rule; clusters nodes at
// both endpoints. `levels` halvings of the step (3..7 typical).
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 int levels = 6);

// Integral of weight(k) * part[x(k)/(1 - x(k))] over [edges.front(),
// edges.back()] for a round-trip factor x that may pass arbitrarily
// close to 1. Wherever that happens the integrand is a Lorentzian whose
// width shrinks with the loss, far below any fixed node spacing, so the
// peaks are hunted explicitly: |1 - x| is sampled on `scan_grid`
// (the funnel |1 - x| ~ |phase| around a resonance is wide, so moderate
// densities see every peak), each local minimum below 0.55 is
// golden-refined, and a linear-pole proxy
//   x*/(c0 + c1 (k - k*)),  c0 = 1 - x(k*),  c1 = -x'(k*)
// is subtracted over a window where the linearization holds. The proxy
// window integrates in closed form through a branch-safe complex
// logarithm (a straight segment cannot wind around the origin); the
// residual has bounded height and ordinary Gauss-Kronrod panels finish
// the job. Empty scan_grid skips the hunt.
struct ResonantLoopResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evals = 0;
};
ResonantLoopResult resonant_loop_integral(
    const std::function<std::complex<double>(double)>& x,
    const std::function<double(double)>& weight, std::span<const double> edges,
    std::span<const double> scan_grid, bool imaginary_part, double abs_floor);

} // namespace casimir

#endif
