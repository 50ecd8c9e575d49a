#ifndef GSFRAC_HILBERT_HPP
#define GSFRAC_HILBERT_HPP

#include "gsfrac/grid_function.hpp"

#include <functional>

namespace gsfrac {

// H f(x) = (1/pi) p.v. integral of f(s)/(x-s) ds. All routines below act on
// the derivative of a compactly supported grid function, the combination the
// half-plane Dirichlet-to-Neumann map produces.

/// H f' at the grid nodes by principal-value quadrature: trapezoidal weights,
/// singular node skipped, equidistant nodes paired so the odd part cancels.
GridFunction hilbert_of_derivative(const GridFunction& f);

struct SpectralResult {
    GridFunction values;
    bool padding_warning = false; // pad factor below 8
};

/// Verification path: H f' through the Fourier multiplier 2*pi*|xi| on a
/// zero-padded periodic extension (pad = padding factor relative to [-1,1]).
SpectralResult hilbert_spectral_oracle(const GridFunction& f, int pad);

/// H f' at a single point x in (-1,1) for a boundary function given by
/// closures, via singularity subtraction and adaptive quadrature.
double hilbert_of_derivative_at(const std::function<double(double)>& fp, double x,
                                double abs_tol = 1e-10);

/// Closed form of (1/pi) p.v. integral of G_tau(x,tau)/(s-tau) dtau, the
/// smooth part of the boundary-integral kernel. Limits are substituted at
/// the removable points s = x and s = -+1.
double kernel_hilbert_part(double x, double s);

} // namespace gsfrac

#endif
