#include "gsfrac/greens.hpp"

#include "gsfrac/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace gsfrac {

namespace {

void check_domain(double x, double tau) {
    if (!(x >= -1.0 && x <= 1.0) || !(tau >= -1.0 && tau <= 1.0))
        throw std::domain_error("green: arguments must lie in [-1,1]");
}

// Lower branch: tau <= x. The upper branch follows by swapping x and tau
// in the symmetric value formula; derivative formulas are spelled out.
inline double g_lower(double x, double tau) {
    double a = x - 1.0, b = tau + 1.0;
    return (1.0 / 24.0) * a * a * b * b * (1.0 + 2.0 * x - 2.0 * tau - x * tau);
}

} // namespace

double green(double x, double tau) {
    check_domain(x, tau);
    return tau <= x ? g_lower(x, tau) : g_lower(tau, x);
}

double green_dx(double x, double tau) {
    check_domain(x, tau);
    if (tau <= x) {
        double a = x - 1.0, b = tau + 1.0, q = 1.0 + 2.0 * x - 2.0 * tau - x * tau;
        return (1.0 / 24.0) * b * b * (2.0 * a * q + a * a * (2.0 - tau));
    }
    double a = tau - 1.0, b = x + 1.0, q = 1.0 + 2.0 * tau - 2.0 * x - x * tau;
    return (1.0 / 24.0) * a * a * (2.0 * b * q + b * b * (-2.0 - tau));
}

double green_dxx(double x, double tau) {
    check_domain(x, tau);
    if (tau <= x) {
        double a = x - 1.0, b = tau + 1.0, q = 1.0 + 2.0 * x - 2.0 * tau - x * tau;
        return (1.0 / 24.0) * b * b * (2.0 * q + 4.0 * a * (2.0 - tau));
    }
    double a = tau - 1.0, b = x + 1.0, q = 1.0 + 2.0 * tau - 2.0 * x - x * tau;
    return (1.0 / 24.0) * a * a * (2.0 * q + 4.0 * b * (-2.0 - tau));
}

double green_dtau(double x, double tau) {
    check_domain(x, tau);
    if (tau <= x) {
        double a = x - 1.0, b = tau + 1.0, q = 1.0 + 2.0 * x - 2.0 * tau - x * tau;
        return (1.0 / 24.0) * a * a * (2.0 * b * q + b * b * (-2.0 - x));
    }
    double a = tau - 1.0, b = x + 1.0, q = 1.0 + 2.0 * tau - 2.0 * x - x * tau;
    return (1.0 / 24.0) * b * b * (2.0 * a * q + a * a * (2.0 - x));
}

double green_dss(double x, double s) {
    check_domain(x, s);
    if (s <= x) {
        double a = x - 1.0;
        return -0.25 * a * a * (2.0 * s + x * s + 1.0);
    }
    double b = x + 1.0;
    return -0.25 * b * b * (-2.0 * s + x * s + 1.0);
}

GreenEval green_eval(double x, double tau) {
    GreenEval e;
    e.x = x;
    e.tau = tau;
    e.g = green(x, tau);
    e.gx = green_dx(x, tau);
    e.gxx = green_dxx(x, tau);
    e.gtau = green_dtau(x, tau);
    e.gtautau = green_dss(x, tau);
    return e;
}

double green_identity_check(double x, const std::function<double(double)>& f,
                            const std::function<double(double)>& fpp) {
    check_domain(x, x);
    auto integrand = [&](double tau) { return green_dss(x, tau) * fpp(tau); };
    std::array<double, 3> breaks = {-1.0, x, 1.0};
    double val = quad::integrate_composite_gl(integrand, breaks, 64);
    return std::abs(val - f(x));
}

} // namespace gsfrac
