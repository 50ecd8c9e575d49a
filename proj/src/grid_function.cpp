#include "gsfrac/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsfrac {

GridFunction::GridFunction(int n_, std::vector<double> v) : n(n_), values(std::move(v)) {
    if (n < 5) throw std::invalid_argument("GridFunction: need n >= 5");
    if (n % 2 == 0) throw std::invalid_argument("GridFunction: n must be odd");
    if (static_cast<int>(values.size()) != n)
        throw std::invalid_argument("GridFunction: value count does not match n");
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

void GridFunction::requires_compact_support() const {
    double scale = std::max(1.0, max_abs());
    if (std::abs(values.front()) > 1e-10 * scale || std::abs(values.back()) > 1e-10 * scale)
        throw std::invalid_argument("GridFunction: endpoint values must vanish (compact support)");
}

GridFunction GridFunction::zeros(int n) {
    return GridFunction(n, std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

GridFunction GridFunction::sample(int n, const std::function<double(double)>& f) {
    GridFunction g = zeros(n);
    for (int i = 0; i < n; ++i) g.values[i] = f(g.node(i));
    return g;
}

} // namespace gsfrac
