#pragma once

// Levy-Feller kernels, generalized Cauchy kernels and the Cauchy problem
// d/dx0 u + D_theta^alpha u = 0 with boundary datum f at x0 = 0.

#include <complex>
#include <span>
#include <vector>

#include "rfl/operators.hpp"

namespace rfl {

/// z = t e^{i pi gamma / 2}.
struct ComplexEvolutionTime {
    double t = 0.0;
    double gamma = 0.0;

    Complex z() const;
};

/// Spectral form of K_{alpha,n}(., z): inverse DFT of exp(-z |xi|^alpha) e_0.
/// Throws std::domain_error when Re(z) <= 0.
CliffordField kernel_K(const GridSpec& grid, ComplexEvolutionTime z, double alpha);

/// omega_n = pi^{(n+1)/2} / Gamma((n+1)/2).
double omega(int n);

/// (t + x) / (2 omega_n (t^2 + |x|^2)^{(n+1)/2}) for any signed t != 0; the
/// closed form of the Cauchy kernel extended off the upper half-space.
Multivector cauchy_kernel_formula(std::span<const double> x, double t);

/// Closed-form Cauchy kernel E(x, t); throws std::domain_error unless t > 0.
Multivector cauchy_kernel_closed(std::span<const double> x, double t);

/// E^{+/-}_{alpha,n}(., z) = (K +/- H K) / 2.
CliffordField cauchy_kernel_pm(const GridSpec& grid, ComplexEvolutionTime z, double alpha, HardySign sign);

/// exp(-t e^{i pi gamma/2} (-Delta)^{alpha/2}) f. Requires t >= 0 and
/// t cos(pi gamma / 2) >= 0, otherwise std::invalid_argument.
CliffordField semigroup_apply(const CliffordField& f, double t, double gamma, double alpha);

struct CauchySolution {
    FellerParams params;
    double x0;
    CliffordField field;
};

/// u(., x0) = exp(-x0 D_theta^alpha) F: the chi_- branch of f for x0 > 0, the
/// chi_+ branch for x0 < 0, and f itself at x0 = 0. Negative x0 requires
/// params.cauchy_admissible().
CauchySolution solve_cauchy(const CliffordField& f, double x0, const FellerParams& params);
/// Same, starting from the spectrum of f.
CliffordField solve_cauchy_spectral(const SpectralField& f_hat, double x0, const FellerParams& params);

/// Default central-difference step 1e-3 * max(1, |x0|).
double default_residual_step(double x0);

/// || (u(x0+d) - u(x0-d)) / (2d) + D_theta^alpha u(x0) ||_2. Both x0 +/- d
/// must lie strictly on the same side of 0.
double pde_residual(const CliffordField& f, double x0, double delta, const FellerParams& params);

struct EvolutionRow {
    double x0;
    double norm;
    double residual;
};

/// Evaluates ||u(., x0)||_p and the PDE residual (NaN at x0 = 0) for each
/// schedule entry; entries are independent and may run concurrently.
std::vector<EvolutionRow> evolve_schedule(const CliffordField& f, const FellerParams& params, double p,
                                          std::span<const double> schedule);

/// FFT kernels against the closed forms at alpha = 1 on a periodic box of
/// side box_factor * t per axis (box_factor >= 40), compared on the central
/// half-window. Errors are max |difference|_0 / max |closed form|_0 over that
/// window. The conjugate (vector) part decays like |x|^{-n}, so its
/// periodization error on the window shrinks only like 1 / box_factor.
struct KernelComparison {
    int n;
    double t;
    int samples;
    double extent;
    double poisson_error;   // K_{1,n}(., t) vs 2 * scalar part of E(x, t)
    double cauchy_plus_error;   // E^+_{1,n} vs E(x, t)
    double cauchy_minus_error;  // E^-_{1,n} vs -E(x, -t)
};

inline constexpr double kMinKernelBoxFactor = 40.0;

KernelComparison compare_kernel_closed_form(int n, double t, int samples_per_axis,
                                            double box_factor = kMinKernelBoxFactor);

/// Default lattice for the comparison: n = 1 uses a 128 t box with 1024
/// samples (the 1/|x| tail needs the wider box), n >= 2 the 40 t box.
struct KernelBox {
    int samples;
    double box_factor;
};
KernelBox default_kernel_box(int n);

}  // namespace rfl
