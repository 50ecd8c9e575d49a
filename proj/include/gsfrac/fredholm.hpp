#ifndef GSFRAC_FREDHOLM_HPP
#define GSFRAC_FREDHOLM_HPP

#include "gsfrac/grid_function.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

namespace gsfrac {

/// Physical constants the dimensionless crack parameters derive from.
struct PhysicalInputs {
    double mu = 1.0;     // bulk shear modulus
    double mu_s = 1.0;   // surface shear modulus
    double zeta = 1.0;   // bending modulus (mean)
    double eta = 0.0;    // bending modulus (deviatoric)
    double ell = 1.0;    // crack half-length
    double sigma = 1.0;  // far-field shear load
};

struct CrackParams {
    double alpha = 1.0; // mu_s / (mu * ell)
    double beta = 1.0;  // (zeta + 2*eta) / (mu * ell^3)
    double gamma = 1.0; // sigma / mu
    std::optional<PhysicalInputs> physical;

    void validate() const;
};

CrackParams nondimensionalize(const PhysicalInputs& in);

/// Kernel of the second-kind boundary integral equation,
/// K(x,s) = -alpha * G_ss(x,s) + (1/pi) p.v. int G_tau(x,tau)/(s-tau) dtau.
double fredholm_kernel(const CrackParams& p, double x, double s);

struct FredholmSystem {
    int n = 0;
    Eigen::MatrixXd A;    // beta*I + W*K at trapezoidal nodes
    Eigen::VectorXd rhs;  // (gamma/24)(1-x^2)^2
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Dense Nystrom collocation system; n odd, >= 33.
FredholmSystem assemble_fredholm(const CrackParams& p, int n);

struct BoundaryProfile {
    GridFunction f;
    std::vector<double> fp;  // first derivative (finite differences)
    std::vector<double> fpp; // second derivative
    int n = 0;
    double cond_estimate = 0.0;
    std::vector<double> strong_residual; // beta f'''' - alpha f'' + H f' - gamma, per node
    double weak_residual_max = 0.0;      // max over the smooth test basis
};

struct ConvergenceRow {
    int n = 0;
    double sup_diff = 0.0;       // against the next finer grid on shared nodes
    double observed_order = 0.0; // log2 ratio of successive sup_diffs (0 for last rows)
};

struct SolveReport {
    BoundaryProfile profile;
    double max_f = 0.0;
    double max_fp = 0.0;
    double tip_slope_left = 0.0;
    double tip_slope_right = 0.0;
    double energy = 0.0; // quadratic boundary energy of the profile
    double assemble_seconds = 0.0;
    double solve_seconds = 0.0;
    double residual_threshold = 0.0;
    double strong_residual_interior = 0.0; // max over |x| <= 0.9
    bool ill_conditioned = false;          // condition estimate above 1e12
    bool residual_flagged = false;
    std::vector<ConvergenceRow> convergence; // filled by convergence_study when requested
};

/// Dense partial-pivoting solve of the collocation system, with derivative
/// recovery and strong/weak residual diagnostics.
SolveReport solve_nystrom(const CrackParams& p, int n, double residual_tol = 1e-3);

/// Independent route: Ritz minimisation of the boundary energy over C^1
/// piecewise cubics clamped at the tips, Hilbert term through the Fourier
/// oracle. Result is sampled on the n_sample Nystrom grid.
BoundaryProfile solve_galerkin_oracle(const CrackParams& p, int m, int n_sample = 513);

/// Quadratic boundary energy of a grid profile:
/// 1/2 int (beta f''^2 + alpha f'^2 + H f' f) - gamma int f.
double profile_energy(const CrackParams& p, const GridFunction& f);

struct TipRow {
    double beta = 0.0;
    double tip_slope = 0.0; // max |f'| over [0.9, 1]
};

std::vector<TipRow> tip_behavior_study(double alpha, std::span<const double> betas,
                                       double gamma, int n);

std::vector<ConvergenceRow> convergence_study(const CrackParams& p, std::span<const int> ns);

} // namespace gsfrac

#endif
