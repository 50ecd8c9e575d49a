#ifndef GSFRAC_GREENS_HPP
#define GSFRAC_GREENS_HPP

#include <functional>

namespace gsfrac {

// Two-point kernel for the clamped fourth-order problem on [-1,1]:
// G_xxxx = delta(x - tau) with G and G_x vanishing at both endpoints.
// Piecewise cubic in each variable, symmetric, C^2 across tau = x.

struct GreenEval {
    double x = 0.0, tau = 0.0;
    double g = 0.0;
    double gx = 0.0, gxx = 0.0;
    double gtau = 0.0, gtautau = 0.0;
};

double green(double x, double tau);
double green_dx(double x, double tau);
double green_dxx(double x, double tau);
double green_dtau(double x, double tau);

/// Second tau-derivative; equals green_dtautau but mirrors the kernel role
/// it plays in the boundary integral operator.
double green_dss(double x, double s);

GreenEval green_eval(double x, double tau);

/// | integral of G_tautau(x,tau) f''(tau) dtau  -  f(x) |, composite
/// Gauss-Legendre split at tau = x. f must vanish with f' at +-1.
double green_identity_check(double x, const std::function<double(double)>& f,
                            const std::function<double(double)>& fpp);

} // namespace gsfrac

#endif
