#pragma once

// Radially symmetric toolkit: Hankel-type Fourier transform of radial
// profiles, the Bessel operator, and the real Paley-Wiener growth check.

#include <optional>
#include <span>
#include <vector>

#include "rfl/grid.hpp"

namespace rfl::pw {

/// Samples phi(rho_i) on rho_i = i * step, i = 0..size-1.
struct RadialProfile {
    double step;
    std::vector<double> values;
};

/// int_{R^n} phi(|xi|) e^{i<x,xi>} dxi at |x| = r for each requested radius,
/// by trapezoidal quadrature of (2 pi)^{n/2} r^{-(n-2)/2} int phi(rho) rho^{n/2} J_{n/2-1}(rho r) drho.
std::vector<double> radial_fourier(const RadialProfile& profile, int n, std::span<const double> radii);

/// phi'' + (2 lambda + 1)/rho phi' with second-order differences; at rho = 0
/// uses the even-extension limit 2 (lambda + 1) phi''(0). Requires lambda > -1/2
/// and at least 5 samples.
RadialProfile bessel_operator_apply(const RadialProfile& profile, double lambda);

struct RadialPwEntry {
    int k;
    double sup;          // s_k = sup_x (1 + |x|^2)^m |((-Delta)^{alpha/2})^k psi(x)|_0
    double growth;       // s_k^{1/k} (s_0 for k = 0)
    bool side_condition; // alpha k > 2m + 1 - n
};

struct RadialPwReport {
    double alpha;
    int m;
    double radius;         // numerical support radius of psi_hat
    std::vector<RadialPwEntry> entries;
    double fitted_lambda;  // max_k s_k / R^{alpha k}
};

/// Throws std::invalid_argument if psi is not radially symmetric on the lattice.
RadialPwReport radial_pw_bound(const CliffordField& psi, double alpha, int m, int k_max,
                               std::optional<double> radius = std::nullopt);

/// Largest |psi(x) - psi(y)|_0 over lattice points with |x| = |y|, relative to
/// max |psi|_0; the same measure on the spectrum is used when it is smaller.
double radial_asymmetry(const CliffordField& psi);

}  // namespace rfl::pw
