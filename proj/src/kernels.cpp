#include "rfl/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rfl {

Complex ComplexEvolutionTime::z() const { return std::polar(t, M_PI * gamma / 2.0); }

CliffordField kernel_K(const GridSpec& grid, ComplexEvolutionTime z, double alpha) {
    // Re z > 0 iff t > 0 and the phase gamma lies in (-1, 1) modulo 4; tested on
    // gamma directly so that gamma = 1 is rejected despite cos(pi/2) != 0 in floating point.
    if (!(z.t > 0.0 && std::abs(std::remainder(z.gamma, 4.0)) < 1.0)) {
        throw std::domain_error("kernel_K: requires Re(z) > 0, got Re(z) = " + std::to_string(z.z().real()));
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("kernel_K: requires 0 < alpha <= 1");
    const AlgebraSignature sig(grid.n());
    const auto spectrum = SpectralField::from_function(grid, sig, [&](std::span<const double> xi) {
        return eval_symbol(symbols::SemigroupFactor{alpha, z.t, z.gamma}, xi, sig);
    });
    return dft_inverse(spectrum);
}

double omega(int n) { return std::pow(M_PI, (n + 1) / 2.0) / std::tgamma((n + 1) / 2.0); }

Multivector cauchy_kernel_formula(std::span<const double> x, double t) {
    const int n = static_cast<int>(x.size());
    const AlgebraSignature sig(n);
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    const double scale = 1.0 / (2.0 * omega(n) * std::pow(t * t + r2, (n + 1) / 2.0));
    Multivector out = Multivector::vector(sig, x) * scale;
    out[0] = t * scale;
    return out;
}

Multivector cauchy_kernel_closed(std::span<const double> x, double t) {
    if (!(t > 0.0)) throw std::domain_error("cauchy_kernel_closed: requires t > 0");
    return cauchy_kernel_formula(x, t);
}

CliffordField cauchy_kernel_pm(const GridSpec& grid, ComplexEvolutionTime z, double alpha, HardySign sign) {
    return hardy_project(sign, kernel_K(grid, z, alpha));
}

CliffordField semigroup_apply(const CliffordField& f, double t, double gamma, double alpha) {
    if (t < 0.0) throw std::invalid_argument("semigroup_apply: evolution time must be >= 0");
    if (t * std::cos(M_PI * gamma / 2.0) < 0.0) {
        throw std::invalid_argument("semigroup_apply: t cos(pi gamma / 2) < 0, the multiplier grows");
    }
    if (t == 0.0) return f;
    return apply_operator(symbols::SemigroupFactor{alpha, t, gamma}, f);
}

namespace {

void require_branch(double x0, const FellerParams& params) {
    if (x0 < 0.0 && !params.cauchy_admissible()) {
        throw std::invalid_argument(
            "solve_cauchy: x0 < 0 needs the skewness constraint |1 - theta| < alpha/2 (alpha=" +
            std::to_string(params.alpha()) + ", theta=" + std::to_string(params.theta()) + ")");
    }
}

SpectralField evolve_spectrum(const SpectralField& f_hat, double x0, const FellerParams& params) {
    if (x0 == 0.0) return f_hat;
    return apply_operator(symbols::CauchyEvolution{params.alpha(), params.theta(), x0}, f_hat);
}

}  // namespace

CliffordField solve_cauchy_spectral(const SpectralField& f_hat, double x0, const FellerParams& params) {
    require_branch(x0, params);
    return dft_inverse(evolve_spectrum(f_hat, x0, params));
}

CauchySolution solve_cauchy(const CliffordField& f, double x0, const FellerParams& params) {
    require_branch(x0, params);
    if (x0 == 0.0) return {params, x0, f};
    return {params, x0, solve_cauchy_spectral(dft_forward(f), x0, params)};
}

double default_residual_step(double x0) { return 1e-3 * std::max(1.0, std::abs(x0)); }

double pde_residual(const CliffordField& f, double x0, double delta, const FellerParams& params) {
    if (!(delta > 0.0)) throw std::invalid_argument("pde_residual: step must be > 0");
    const double lo = x0 - delta;
    const double hi = x0 + delta;
    if (!((lo > 0.0 && hi > 0.0) || (lo < 0.0 && hi < 0.0))) {
        throw std::invalid_argument("pde_residual: x0 +/- delta crosses the boundary x0 = 0");
    }
    require_branch(x0, params);
    const auto f_hat = dft_forward(f);
    auto derivative = evolve_spectrum(f_hat, hi, params);
    derivative -= evolve_spectrum(f_hat, lo, params);
    derivative *= 1.0 / (2.0 * delta);
    const auto u = evolve_spectrum(f_hat, x0, params);
    derivative += apply_operator(symbols::RieszFeller{params.alpha(), params.theta()}, u);
    return lp_norm(dft_inverse(derivative), 2.0);
}

std::vector<EvolutionRow> evolve_schedule(const CliffordField& f, const FellerParams& params, double p,
                                          std::span<const double> schedule) {
    for (double x0 : schedule) require_branch(x0, params);
    const auto f_hat = dft_forward(f);
    std::vector<EvolutionRow> rows;
    rows.reserve(schedule.size());
    for (double x0 : schedule) {
        EvolutionRow row{x0, lp_norm(dft_inverse(evolve_spectrum(f_hat, x0, params)), p),
                         std::numeric_limits<double>::quiet_NaN()};
        if (x0 != 0.0) {
            const double delta = std::min(default_residual_step(x0), std::abs(x0) / 2.0);
            row.residual = pde_residual(f, x0, delta, params);
        }
        rows.push_back(row);
    }
    return rows;
}

KernelBox default_kernel_box(int n) {
    switch (n) {
        case 1: return {1024, 128.0};
        case 2: return {256, kMinKernelBoxFactor};
        case 3: return {64, kMinKernelBoxFactor};
        default: return {16, kMinKernelBoxFactor};
    }
}

KernelComparison compare_kernel_closed_form(int n, double t, int samples_per_axis, double box_factor) {
    if (!(t > 0.0)) throw std::invalid_argument("compare_kernel_closed_form: t must be > 0");
    if (!(box_factor >= kMinKernelBoxFactor)) {
        throw std::invalid_argument("compare_kernel_closed_form: box factor must be >= 40");
    }
    const double extent = box_factor * t;
    const GridSpec grid = GridSpec::uniform(n, samples_per_axis, extent / samples_per_axis);
    const ComplexEvolutionTime z{t, 0.0};
    const auto poisson = kernel_K(grid, z, 1.0);
    const auto plus = hardy_project(HardySign::Plus, poisson);
    const auto minus = hardy_project(HardySign::Minus, poisson);

    double err_k = 0.0, err_p = 0.0, err_m = 0.0;
    double ref_k = 0.0, ref_p = 0.0, ref_m = 0.0;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (std::size_t q = 0; q < grid.point_count(); ++q) {
        grid.coordinates(q, x);
        bool inside = true;
        for (double c : x) inside = inside && std::abs(c) <= extent / 4.0;
        if (!inside) continue;
        const Multivector e_plus = cauchy_kernel_closed(x, t);
        const Multivector e_minus = -cauchy_kernel_formula(x, -t);
        const Multivector k_closed = Multivector::scalar(e_plus.signature(), 2.0 * e_plus[0]);
        err_k = std::max(err_k, mv_norm0(poisson.at(q) - k_closed));
        err_p = std::max(err_p, mv_norm0(plus.at(q) - e_plus));
        err_m = std::max(err_m, mv_norm0(minus.at(q) - e_minus));
        ref_k = std::max(ref_k, mv_norm0(k_closed));
        ref_p = std::max(ref_p, mv_norm0(e_plus));
        ref_m = std::max(ref_m, mv_norm0(e_minus));
    }
    return {n, t, samples_per_axis, extent, err_k / ref_k, err_p / ref_p, err_m / ref_m};
}

}  // namespace rfl
