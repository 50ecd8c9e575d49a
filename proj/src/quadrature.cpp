#include "gsfrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gsfrac::quad {

namespace {

GaussRule compute_gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev initial guess, then Newton on P_n(x) = 0.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one clean-up step
                p0 = 1.0; p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (x * p0 - p1) / (x * x - 1.0);
                x -= p0 / pp;
                break;
            }
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

// G7,K15 pair (Kronrod abscissae/weights; odd-indexed nodes carry the
// embedded Gauss rule).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double kronrod;
    double err;
};

PanelResult gk15_panel(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    // symmetric pairs first, centre node last
    for (int k = 0; k < 7; ++k) {
        double u = hl * kXgk[k];
        double pair = f(c - u) + f(c + u);
        resk += kWgk[k] * pair;
        if (k % 2 == 1) resg += kWg[k / 2] * pair;
    }
    double fc = f(c);
    resk += kWgk[7] * fc;
    resg += kWg[3] * fc;
    resk *= hl;
    resg *= hl;
    return {resk, std::abs(resk - resg)};
}

double adaptive_rec(const Integrand& f, double a, double b, double tol, int depth) {
    PanelResult r = gk15_panel(f, a, b);
    if (r.err <= tol || depth <= 0) return r.kronrod;
    double m = 0.5 * (a + b);
    return adaptive_rec(f, a, m, 0.5 * tol, depth - 1) +
           adaptive_rec(f, m, b, 0.5 * tol, depth - 1);
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

double integrate_gl(const Integrand& f, double a, double b, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    CompensatedSum acc;
    int i = 0, j = n - 1;
    for (; i < j; ++i, --j) {
        double u = hl * rule.nodes[j];
        acc.add(rule.weights[i] * (f(c - u) + f(c + u)));
    }
    if (i == j) acc.add(rule.weights[i] * f(c));
    return hl * acc.value();
}

double integrate_composite_gl(const Integrand& f, std::span<const double> breaks,
                              int nodes_per_panel) {
    if (breaks.size() < 2) throw std::invalid_argument("integrate_composite_gl: need >= 2 breakpoints");
    CompensatedSum acc;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        if (breaks[k + 1] <= breaks[k]) continue; // skip empty/degenerate panels
        acc.add(integrate_gl(f, breaks[k], breaks[k + 1], nodes_per_panel));
    }
    return acc.value();
}

double integrate_adaptive(const Integrand& f, double a, double b, double abs_tol,
                          int max_depth) {
    if (!(b > a)) return 0.0;
    return adaptive_rec(f, a, b, abs_tol, max_depth);
}

} // namespace gsfrac::quad
