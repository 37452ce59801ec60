#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

namespace casimir {

namespace {

// Newton iteration on the Legendre polynomial; standard construction.
GaussLegendreRule build_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

std::map<int, GaussLegendreRule> g_gl_cache;
std::mutex g_gl_mutex;

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (symmetric half listed).
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGauss7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - h * kKronrodNodes[i]);
        fv[14 - i] = f(mid + h * kKronrodNodes[i]);
    }
    fv[7] = f(mid);
    double kron = kKronrodWeights[7] * fv[7];
    double gauss = kGauss7Weights[3] * fv[7];
    for (int i = 0; i < 7; ++i) kron += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
    for (int i = 0; i < 3; ++i)
        gauss += kGauss7Weights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    const double value = kron * h;
    const double err = std::abs((kron - gauss) * h);
    return {a, b, value, err + 1e-300};
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto it = g_gl_cache.find(n);
    if (it == g_gl_cache.end()) it = g_gl_cache.emplace(n, build_gauss_legendre(n)).first;
    return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + h * rule.nodes[i]);
    return sum * h;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double rel_tol, double abs_tol,
                                    int max_intervals) {
    QuadratureResult out;
    if (a == b) return out;
    std::priority_queue<Segment> queue;
    Segment s = gk15(f, a, b);
    out.evaluations = 15;
    double total = s.value;
    double total_err = s.error;
    queue.push(s);
    while (static_cast<int>(queue.size()) < max_intervals) {
        if (total_err <= std::max(rel_tol * std::abs(total), abs_tol)) break;
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { // interval exhausted by rounding
            queue.push(worst);
            break;
        }
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
    out.value = total;
    out.abs_error = total_err;
    out.converged = total_err <= std::max(rel_tol * std::abs(total), abs_tol) * 1.001;
    return out;
}

QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  std::span<const double> edges, double rel_tol,
                                  double abs_tol, int max_intervals_per_panel) {
    QuadratureResult out;
    if (edges.size() < 2) return out;
    // First pass: coarse panel values to set a sensible absolute floor.
    std::vector<Segment> coarse;
    coarse.reserve(edges.size() - 1);
    double rough = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        coarse.push_back(gk15(f, edges[i], edges[i + 1]));
        out.evaluations += 15;
        rough += std::abs(coarse.back().value);
    }
    const double floor = std::max(abs_tol, rel_tol * rough / std::max<size_t>(edges.size() - 1, 1));
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        QuadratureResult piece;
        if (coarse[i].error <= floor) {
            piece.value = coarse[i].value;
            piece.abs_error = coarse[i].error;
        } else {
            piece = integrate_adaptive(f, edges[i], edges[i + 1], rel_tol * 0.5, floor,
                                       max_intervals_per_panel);
            out.evaluations += piece.evaluations;
            out.converged = out.converged && piece.converged;
        }
        out.value += piece.value;
        out.abs_error += piece.abs_error;
    }
    return out;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b, int levels) {
    // x = mid + h*tanh(pi/2 sinh(t)); truncate |t| at 3.7 (weights ~ 1e-16).
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double tmax = 3.7;
    double h = 1.0;
    auto node = [&](double t, double& x, double& w) {
        const double s = M_PI_2 * std::sinh(t);
        const double ch = std::cosh(s);
        x = mid + half * std::tanh(s);
        w = half * M_PI_2 * std::cosh(t) / (ch * ch);
    };
    double x, w;
    node(0.0, x, w);
    double sum = f(x) * w;
    for (double t = h; t <= tmax; t += h) {
        node(t, x, w);
        if (x > a && x < b) sum += f(x) * w;
        node(-t, x, w);
        if (x > a && x < b) sum += f(x) * w;
    }
    double prev = sum * h;
    for (int level = 1; level <= levels; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) {
            node(t, x, w);
            if (x > a && x < b) add += f(x) * w;
            node(-t, x, w);
            if (x > a && x < b) add += f(x) * w;
        }
        sum += add;
        const double value = sum * h;
        if (level > 3 && std::abs(value - prev) <= 1e-14 * std::abs(value)) return value;
        prev = value;
    }
    return prev;
}


namespace {

struct LocatedPole {
    double k = 0.0;
    std::complex<double> x0; // x(k*)
    std::complex<double> c0; // 1 - x(k*)
    std::complex<double> c1; // -x'(k*)
    double w_lo = 0.0, w_hi = 0.0;
    double weight = 1.0; // outer weight frozen at k*
};

// Closed-form window integral of x0/(c0 + c1 t), t = k - k*. A straight
// segment cannot wind around the origin, so the wrapped phase change is
// the correct branch (principal value if it passes through it).
std::complex<double> pole_window_integral(const LocatedPole& p) {
    const std::complex<double> da = p.c0 + p.c1 * (p.w_lo - p.k);
    const std::complex<double> db = p.c0 + p.c1 * (p.w_hi - p.k);
    const double mag = std::log(std::abs(db) / std::abs(da));
    double dphase = std::arg(db) - std::arg(da);
    while (dphase > M_PI) dphase -= 2.0 * M_PI;
    while (dphase <= -M_PI) dphase += 2.0 * M_PI;
    return p.x0 / p.c1 * std::complex<double>(mag, dphase);
}

} // namespace

ResonantLoopResult resonant_loop_integral(
    const std::function<std::complex<double>(double)>& x,
    const std::function<double(double)>& weight, std::span<const double> edges,
    std::span<const double> scan_grid, bool imaginary_part, double abs_floor) {
    using complexd = std::complex<double>;
    ResonantLoopResult out;
    if (edges.size() < 2) return out;
    const double lo = edges.front(), hi = edges.back();
    auto take = [imaginary_part](complexd z) {
        return imaginary_part ? z.imag() : z.real();
    };

    // ---- locate the near-unity passes of x on the scan grid
    std::vector<LocatedPole> poles;
    if (scan_grid.size() >= 3) {
        std::vector<double> vals(scan_grid.size());
        for (size_t i = 0; i < scan_grid.size(); ++i)
            vals[i] = std::abs(1.0 - x(scan_grid[i]));
        out.evals += static_cast<long>(scan_grid.size());
        auto metric = [&](double t) { return std::abs(1.0 - x(t)); };
        for (size_t i = 1; i + 1 < scan_grid.size(); ++i) {
            if (!(vals[i] < vals[i - 1] && vals[i] <= vals[i + 1] && vals[i] < 0.55))
                continue;
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double a = scan_grid[i - 1], b = scan_grid[i + 1];
            double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
            double f1 = metric(x1), f2 = metric(x2);
            for (int it = 0; it < 60 && (b - a) > 1e-15 * (std::abs(b) + 1e-300); ++it) {
                if (f1 < f2) {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - gr * (b - a);
                    f1 = metric(x1);
                } else {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + gr * (b - a);
                    f2 = metric(x2);
                }
                ++out.evals;
            }
            LocatedPole pole;
            pole.k = 0.5 * (a + b);
            pole.x0 = x(pole.k);
            pole.c0 = 1.0 - pole.x0;
            const double span = scan_grid[i + 1] - scan_grid[i - 1];
            const double h =
                std::max(1e-4 * span, 1e-12 * std::abs(pole.k) + 1e-300);
            pole.c1 = -(x(pole.k + h) - x(pole.k - h)) / (2.0 * h);
            out.evals += 3;
            const double slope = std::abs(pole.c1);
            if (!(slope > 0.0) || !std::isfinite(slope)) continue;
            const double r_lin = 0.25 / slope; // |c1| dk ~ 0.25
            pole.w_lo = std::max(pole.k - r_lin, lo);
            pole.w_hi = std::min(pole.k + r_lin, hi);
            pole.weight = weight(pole.k);
            poles.push_back(pole);
        }
        std::sort(poles.begin(), poles.end(),
                  [](const LocatedPole& a, const LocatedPole& b) { return a.k < b.k; });
        for (size_t i = 0; i + 1 < poles.size(); ++i) {
            if (poles[i].w_hi > poles[i + 1].w_lo) {
                const double mid = 0.5 * (poles[i].k + poles[i + 1].k);
                poles[i].w_hi = std::min(poles[i].w_hi, mid);
                poles[i + 1].w_lo = std::max(poles[i + 1].w_lo, mid);
            }
        }
    }

    // ---- panel list including pole windows
    std::vector<double> all_edges(edges.begin(), edges.end());
    for (const LocatedPole& p : poles)
        for (double e : {p.w_lo, p.k, p.w_hi})
            if (e > lo && e < hi) all_edges.push_back(e);
    std::sort(all_edges.begin(), all_edges.end());
    all_edges.erase(
        std::unique(all_edges.begin(), all_edges.end(),
                    [](double a, double b) {
                        return b - a <= 1e-13 * (std::abs(a) + std::abs(b) + 1e-300);
                    }),
        all_edges.end());

    auto proxy_sum = [&](double k) {
        double s = 0.0;
        for (const LocatedPole& p : poles) {
            if (k >= p.w_lo && k <= p.w_hi)
                s += p.weight * take(p.x0 / (p.c0 + p.c1 * (k - p.k)));
        }
        return s;
    };
    auto residual = [&](double k) {
        const complexd xv = x(k);
        complexd den = 1.0 - xv;
        const double guard = 1e-15 * (1.0 + std::abs(xv));
        if (std::abs(den) < guard)
            den = den == 0.0 ? complexd(guard, 0.0) : den * (guard / std::abs(den));
        return weight(k) * take(xv / den) - proxy_sum(k);
    };

    for (size_t i = 0; i + 1 < all_edges.size(); ++i) {
        const QuadratureResult r = integrate_adaptive(residual, all_edges[i],
                                                      all_edges[i + 1], 1e-7,
                                                      abs_floor, 700);
        out.value += r.value;
        out.abs_error += r.abs_error;
        out.evals += r.evaluations;
    }
    for (const LocatedPole& p : poles)
        out.value += p.weight * take(pole_window_integral(p));
    return out;
}

} // namespace casimir
