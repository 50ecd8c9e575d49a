#ifndef GSFRAC_FINITE_DIFF_HPP
#define GSFRAC_FINITE_DIFF_HPP

#include <span>
#include <vector>

namespace gsfrac::fd {

/// Fornberg weights for the m-th derivative at z from the given stencil
/// abscissae.
std::vector<double> stencil_weights(double z, std::span<const double> xs, int m);

// Derivative recovery on a uniform grid with spacing h: 4th-order centred
// stencils in the interior, 2nd-order shifted stencils near the ends.
std::vector<double> deriv1(std::span<const double> f, double h);
std::vector<double> deriv2(std::span<const double> f, double h);
std::vector<double> deriv4(std::span<const double> f, double h);

} // namespace gsfrac::fd

#endif
