#include "gsfrac/hilbert.hpp"

#include "gsfrac/finite_diff.hpp"
#include "gsfrac/quadrature.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace gsfrac {

namespace {

// FFTW planner state is process-global.
std::mutex g_fftw_mutex;

void fft_inplace(std::vector<std::complex<double>>& a, int sign) {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_complex* data = reinterpret_cast<fftw_complex*>(a.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(a.size()), data, data, sign,
                                      FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

std::size_t next_pow2(std::size_t v) {
    std::size_t p = 1;
    while (p < v) p <<= 1;
    return p;
}

} // namespace

GridFunction hilbert_of_derivative(const GridFunction& f) {
    if (f.n < 5) throw std::invalid_argument("hilbert_of_derivative: grid too coarse");
    f.requires_compact_support();
    const int n = f.n;
    const double h = f.h();
    std::vector<double> fp = fd::deriv1(f.values, h);

    // trapezoidal weights with the singular node skipped; symmetric pairs
    // are added together so parity survives in floating point
    auto weight = [&](int j) { return (j == 0 || j == n - 1) ? 0.5 * h : h; };
    GridFunction out = GridFunction::zeros(n);
    for (int i = 0; i < n; ++i) {
        quad::CompensatedSum acc;
        for (int k = 1; k < n; ++k) {
            int jl = i - k, jr = i + k;
            bool okl = jl >= 0, okr = jr <= n - 1;
            if (!okl && !okr) break;
            double term = 0.0;
            if (okl && okr) {
                // x_i - x_j = +-k*h exactly in this pairing
                term = (weight(jl) * fp[jl] - weight(jr) * fp[jr]) / (k * h);
            } else if (okl) {
                term = weight(jl) * fp[jl] / (k * h);
            } else {
                term = -weight(jr) * fp[jr] / (k * h);
            }
            acc.add(term);
        }
        out.values[i] = acc.value() / M_PI;
    }
    return out;
}

SpectralResult hilbert_spectral_oracle(const GridFunction& f, int pad) {
    if (pad < 1) throw std::invalid_argument("hilbert_spectral_oracle: pad must be >= 1");
    f.requires_compact_support();
    SpectralResult res;
    res.padding_warning = pad < 8;

    const int n = f.n;
    const double h = f.h();
    const std::size_t total = next_pow2(static_cast<std::size_t>(pad) * (n - 1));
    const std::size_t offset = (total - static_cast<std::size_t>(n - 1)) / 2;

    std::vector<std::complex<double>> a(total, {0.0, 0.0});
    for (int i = 0; i < n; ++i) a[offset + i] = f.values[i];

    fft_inplace(a, FFTW_FORWARD);

    // (H f')^hat = 2*pi*|xi| * f^hat with xi_k = k/(N*h) on the periodic lattice
    const double dxi = 1.0 / (static_cast<double>(total) * h);
    for (std::size_t k = 0; k < total; ++k) {
        double kk = (k <= total / 2) ? static_cast<double>(k)
                                     : static_cast<double>(k) - static_cast<double>(total);
        a[k] *= 2.0 * M_PI * std::abs(kk) * dxi;
    }

    fft_inplace(a, FFTW_BACKWARD);

    res.values = GridFunction::zeros(n);
    const double scale = 1.0 / static_cast<double>(total);
    for (int i = 0; i < n; ++i) res.values.values[i] = a[offset + i].real() * scale;
    return res;
}

double hilbert_of_derivative_at(const std::function<double(double)>& fp, double x,
                                double abs_tol) {
    if (!(x > -1.0 && x < 1.0))
        throw std::domain_error("hilbert_of_derivative_at: x must lie in (-1,1)");
    const double fpx = fp(x);
    auto reg = [&](double s) {
        double d = x - s;
        if (std::abs(d) < 1e-14) return 0.0; // regularised integrand ~ f''(x)*d
        return (fp(s) - fpx) / d;
    };
    double v = quad::integrate_adaptive(reg, -1.0, x, 0.5 * abs_tol) +
               quad::integrate_adaptive(reg, x, 1.0, 0.5 * abs_tol);
    v += fpx * std::log((1.0 + x) / (1.0 - x));
    return v / M_PI;
}

double kernel_hilbert_part(double x, double s) {
    constexpr double guard = 1e-9;
    const double inv_pi = 1.0 / M_PI;

    double t = 0.25 * inv_pi * (s * x - 1.0) * (x * x - 1.0);

    double d = s - x;
    if (std::abs(d) >= guard) t += 0.5 * inv_pi * d * d * std::log(std::abs(d));

    double p = 1.0 + s;
    if (std::abs(p) >= guard) {
        double xm = x - 1.0;
        t -= 0.125 * inv_pi * xm * xm * (-x + 2.0 * s + s * x) * p * std::log(p);
    }

    double q = 1.0 - s;
    if (std::abs(q) >= guard) {
        double xp = x + 1.0;
        t -= 0.125 * inv_pi * xp * xp * (x - 2.0 * s + s * x) * q * std::log(q);
    }
    return t;
}

} // namespace gsfrac
