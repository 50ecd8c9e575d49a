#ifndef GSFRAC_QUADRATURE_HPP
#define GSFRAC_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace gsfrac::quad {

/// Compensated (Neumaier) accumulator for long sums.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct GaussRule {
    std::vector<double> nodes;   // on [-1,1], ascending
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n points (Newton iteration on P_n).
const GaussRule& gauss_legendre(int n);

using Integrand = std::function<double(double)>;

/// Fixed Gauss-Legendre integral over [a,b]. Symmetric node pairs are summed
/// first so that mirrored integrands give bitwise-mirrored results.
double integrate_gl(const Integrand& f, double a, double b, int n);

/// Composite Gauss-Legendre over the sorted breakpoint list.
double integrate_composite_gl(const Integrand& f, std::span<const double> breaks,
                              int nodes_per_panel);

/// Adaptive Gauss-Kronrod (G7,K15) bisection to absolute tolerance.
double integrate_adaptive(const Integrand& f, double a, double b, double abs_tol,
                          int max_depth = 48);

} // namespace gsfrac::quad

#endif
