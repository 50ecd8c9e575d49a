#ifndef GSFRAC_GRID_FUNCTION_HPP
#define GSFRAC_GRID_FUNCTION_HPP

#include <functional>
#include <vector>

namespace gsfrac {

/// Uniform grid on [-1,1] with both endpoints and an odd node count, so
/// x = 0 is a node. Transform and solver inputs must have compact support
/// (see requires_compact_support); outputs of transforms need not.
struct GridFunction {
    int n = 0;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(int n_, std::vector<double> v);

    double h() const { return 2.0 / (n - 1); }
    double node(int i) const { return -1.0 + 2.0 * i / (n - 1); }

    double max_abs() const;

    /// Throws if the endpoint values are not negligibly small.
    void requires_compact_support() const;

    static GridFunction zeros(int n);
    static GridFunction sample(int n, const std::function<double(double)>& f);
};

} // namespace gsfrac

#endif
