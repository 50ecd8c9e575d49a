#include "gsfrac/finite_diff.hpp"

#include <cmath>
#include <stdexcept>

namespace gsfrac::fd {

std::vector<double> stencil_weights(double z, std::span<const double> xs, int m) {
    // Fornberg's recursion.
    const int n = static_cast<int>(xs.size());
    if (n <= m) throw std::invalid_argument("stencil_weights: need more points than derivative order");
    std::vector<double> C(static_cast<std::size_t>(n) * (m + 1), 0.0);
    auto at = [&](int i, int k) -> double& { return C[static_cast<std::size_t>(i) * (m + 1) + k]; };
    at(0, 0) = 1.0;
    double c1 = 1.0;
    double c4 = xs[0] - z;
    for (int i = 1; i < n; ++i) {
        int mn = std::min(i, m);
        double c2 = 1.0;
        double c5 = c4;
        c4 = xs[i] - z;
        for (int j = 0; j < i; ++j) {
            double c3 = xs[i] - xs[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    at(i, k) = c1 * (k * at(i - 1, k - 1) - c5 * at(i - 1, k)) / c2;
                at(i, 0) = -c1 * c5 * at(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k)
                at(j, k) = (c4 * at(j, k) - k * at(j, k - 1)) / c3;
            at(j, 0) = c4 * at(j, 0) / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = at(i, m);
    return w;
}

namespace {

std::vector<double> unit_weights(int z, int first, int count, int m) {
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i) xs[i] = first + i;
    return stencil_weights(static_cast<double>(z), xs, m);
}

double apply(std::span<const double> f, int first, std::span<const double> w) {
    double s = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * f[first + static_cast<int>(k)];
    return s;
}

} // namespace

std::vector<double> deriv1(std::span<const double> f, double h) {
    const int n = static_cast<int>(f.size());
    if (n < 5) throw std::invalid_argument("deriv1: need n >= 5");
    std::vector<double> d(n);
    const double s1 = 1.0 / h;
    // 2nd-order stencils at the two nodes next to each end
    static const std::vector<double> wl0 = unit_weights(0, 0, 3, 1);
    static const std::vector<double> wc3 = unit_weights(1, 0, 3, 1);
    d[0] = apply(f, 0, wl0) * s1;
    d[1] = apply(f, 0, wc3) * s1;
    for (int i = 2; i <= n - 3; ++i)
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    static const std::vector<double> wr1 = unit_weights(1, 0, 3, 1);
    static const std::vector<double> wr0 = unit_weights(2, 0, 3, 1);
    d[n - 2] = apply(f, n - 3, wr1) * s1;
    d[n - 1] = apply(f, n - 3, wr0) * s1;
    return d;
}

std::vector<double> deriv2(std::span<const double> f, double h) {
    const int n = static_cast<int>(f.size());
    if (n < 5) throw std::invalid_argument("deriv2: need n >= 5");
    std::vector<double> d(n);
    const double s2 = 1.0 / (h * h);
    static const std::vector<double> wl0 = unit_weights(0, 0, 4, 2);
    static const std::vector<double> wc3 = unit_weights(1, 0, 3, 2);
    d[0] = apply(f, 0, wl0) * s2;
    d[1] = apply(f, 0, wc3) * s2;
    for (int i = 2; i <= n - 3; ++i)
        d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) /
               (12.0 * h * h);
    static const std::vector<double> wr1 = unit_weights(1, 0, 3, 2);
    static const std::vector<double> wr0 = unit_weights(3, 0, 4, 2);
    d[n - 2] = apply(f, n - 3, wr1) * s2;
    d[n - 1] = apply(f, n - 4, wr0) * s2;
    return d;
}

std::vector<double> deriv4(std::span<const double> f, double h) {
    const int n = static_cast<int>(f.size());
    if (n < 7) throw std::invalid_argument("deriv4: need n >= 7");
    std::vector<double> d(n);
    const double s4 = 1.0 / (h * h * h * h);
    static const std::vector<double> w0 = unit_weights(0, 0, 7, 4);
    static const std::vector<double> w1 = unit_weights(1, 0, 7, 4);
    static const std::vector<double> w2 = unit_weights(2, 0, 7, 4);
    d[0] = apply(f, 0, w0) * s4;
    d[1] = apply(f, 0, w1) * s4;
    d[2] = apply(f, 0, w2) * s4;
    for (int i = 3; i <= n - 4; ++i)
        d[i] = (-f[i - 3] + 12.0 * f[i - 2] - 39.0 * f[i - 1] + 56.0 * f[i] -
                39.0 * f[i + 1] + 12.0 * f[i + 2] - f[i + 3]) /
               (6.0 * h * h * h * h);
    static const std::vector<double> w4 = unit_weights(4, 0, 7, 4);
    static const std::vector<double> w5 = unit_weights(5, 0, 7, 4);
    static const std::vector<double> w6 = unit_weights(6, 0, 7, 4);
    d[n - 3] = apply(f, n - 7, w4) * s4;
    d[n - 2] = apply(f, n - 7, w5) * s4;
    d[n - 1] = apply(f, n - 7, w6) * s4;
    return d;
}

} // namespace gsfrac::fd
