#include <algorithm>
#include <cmath>
#include <random>

#include "commands.hpp"
#include "rfl/favard.hpp"
#include "rfl/kernels.hpp"
#include "rfl/paley_wiener.hpp"
#include "rfl/radial.hpp"

namespace rfl::app {

namespace {

using nlohmann::json;

class Checks {
public:
    explicit Checks(ExperimentReport& report) : report_(report) {
        report_.table.columns = {"check", "value", "bound", "pass"};
    }

    /// value <= bound
    void at_most(const std::string& name, double value, double bound) {
        add(name, value, bound, value <= bound);
    }
    /// value >= bound
    void at_least(const std::string& name, double value, double bound) {
        add(name, value, bound, value >= bound);
    }
    void add(const std::string& name, double value, double bound, bool pass) {
        pass = pass && !std::isnan(value);
        report_.pass = report_.pass && pass;
        report_.table.rows.push_back({name, number(value), number(bound), pass});
    }

private:
    ExperimentReport& report_;
};

Multivector random_mv(AlgebraSignature sig, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Multivector v(sig);
    for (auto& c : v.coeffs()) c = Complex(normal(rng), normal(rng));
    return v;
}

CliffordField white_noise(const GridSpec& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const AlgebraSignature sig(g.n());
    CliffordField f(g, sig);
    for (std::size_t q = 0; q < f.point_count(); ++q) f.set(q, random_mv(sig, rng));
    return f;
}

std::vector<int> centre_of(const GridSpec& g) {
    std::vector<int> c(static_cast<std::size_t>(g.n()));
    for (int j = 0; j < g.n(); ++j) c[j] = g.sizes()[j] / 2;
    return c;
}

CliffordField without_mean(const CliffordField& f) {
    auto spectrum = dft_forward(f);
    spectrum.set(f.grid().linear_index(centre_of(f.grid())), Multivector(f.signature()));
    return dft_inverse(spectrum);
}

template <Domain D>
double rel(const Field<D>& a, const Field<D>& b) {
    const double ref = b.max_norm0();
    auto d = a;
    d -= b;
    return ref == 0.0 ? d.max_norm0() : d.max_norm0() / ref;
}

double l2_distance(const CliffordField& a, const CliffordField& b) {
    auto d = a;
    d -= b;
    return lp_norm(d, 2.0);
}

void algebra_checks(Checks& checks, int n, std::uint64_t seed) {
    const AlgebraSignature sig(n);
    const auto e0 = Multivector::scalar(sig, 1.0);
    double anti = 0.0;
    for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
            const auto ej = Multivector::generator(sig, j), ek = Multivector::generator(sig, k);
            anti = std::max(anti, mv_norm0(ej * ek + ek * ej + e0 * (j == k ? 2.0 : 0.0)));
        }
    }
    checks.add("algebra.anticommutation", anti, 0.0, anti == 0.0);

    std::mt19937_64 rng(seed);
    double product = 0.0, triangle = 0.0, assoc = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const auto a = random_mv(sig, rng), b = random_mv(sig, rng), c = random_mv(sig, rng);
        const double na = mv_norm0(a), nb = mv_norm0(b);
        product = std::max(product, mv_norm0(a * b) / (na * nb));
        triangle = std::max(triangle, mv_norm0(a + b) / (na + nb));
        assoc = std::max(assoc, max_abs_diff((a * b) * c, a * (b * c)) / (na * nb * mv_norm0(c)));
    }
    checks.at_most("algebra.submultiplicative", product, 1.0 + 1e-12);
    checks.at_most("algebra.triangle", triangle, 1.0 + 1e-12);
    checks.at_most("algebra.associative", assoc, 1e-12);
}

void operator_checks(Checks& checks, const GridSpec& g, std::uint64_t seed) {
    namespace sym = symbols;
    const AlgebraSignature sig(g.n());
    const auto f = white_noise(g, seed + 1);
    const auto fz = without_mean(white_noise(g, seed + 2));
    const Symbol laplace = [&](std::span<const double> xi) {
        double r2 = 0.0;
        for (double c : xi) r2 += c * c;
        return Multivector::scalar(sig, r2);
    };
    checks.at_most("ops.dirac_square",
                   rel(apply_operator(sym::Dirac{}, apply_operator(sym::Dirac{}, f)), apply_multiplier(laplace, f)),
                   1e-12);
    checks.at_most("ops.hilbert_square",
                   rel(apply_operator(sym::RieszHilbert{}, apply_operator(sym::RieszHilbert{}, fz)), fz), 1e-12);
    CliffordField sum(g, sig);
    for (int j = 1; j <= g.n(); ++j) {
        sum += left_multiply(Multivector::generator(sig, j), apply_operator(sym::DirectionalRiesz{j}, f));
    }
    checks.at_most("ops.hilbert_riesz_sum", rel(sum, apply_operator(sym::RieszHilbert{}, f)), 1e-12);

    const auto plus = hardy_project(HardySign::Plus, fz);
    const auto minus = hardy_project(HardySign::Minus, fz);
    checks.at_most("ops.chi_complementary", rel(plus + minus, fz), 1e-12);
    checks.at_most("ops.chi_idempotent", std::max(rel(hardy_project(HardySign::Plus, plus), plus),
                                                  rel(hardy_project(HardySign::Minus, minus), minus)),
                   1e-12);
    checks.at_most("ops.chi_annihilating",
                   std::max(hardy_project(HardySign::Plus, minus).max_norm0(),
                            hardy_project(HardySign::Minus, plus).max_norm0()) /
                       fz.max_norm0(),
                   1e-12);
    double htheta = 0.0;
    for (double theta : {-0.7, 0.3, 1.0, 1.6}) {
        auto mix = apply_operator(sym::ChiPlus{}, f);
        mix *= std::polar(1.0, -M_PI * theta);
        mix += apply_operator(sym::ChiMinus{}, f);
        // Both sides take the identity at the DC bin.
        const auto lhs = apply_operator(sym::HTheta{theta}, without_mean(f));
        htheta = std::max(htheta, rel(lhs, without_mean(mix)));
    }
    checks.at_most("ops.h_theta_decomposition", htheta, 1e-12);
    checks.at_most("ops.riesz_feller_1_1_is_dirac",
                   rel(apply_operator(sym::RieszFeller{1.0, 1.0}, f), apply_operator(sym::Dirac{}, f)), 1e-12);
}

void kernel_checks(Checks& checks, const GridSpec& g, std::uint64_t seed) {
    for (int n : {1, 2}) {
        for (double t : {0.5, 1.0}) {
            const auto box = default_kernel_box(n);
            const auto cmp = compare_kernel_closed_form(n, t, box.samples, box.box_factor);
            const double worst = std::max({cmp.poisson_error, cmp.cauchy_plus_error, cmp.cauchy_minus_error});
            char name[64];
            std::snprintf(name, sizeof name, "kernels.closed_form_n%d_t%g", n, t);
            checks.at_most(name, worst, 1e-2);
        }
    }
    const AlgebraSignature sig(g.n());
    const ComplexEvolutionTime z{0.6, 0.3};
    const auto spectrum = dft_forward(cauchy_kernel_pm(g, z, 0.7, HardySign::Plus));
    std::vector<double> xi(static_cast<std::size_t>(g.n()));
    double worst = 0.0;
    for (std::size_t q = 0; q < g.point_count(); ++q) {
        g.frequencies(q, xi);
        double r2 = 0.0;
        for (double c : xi) r2 += c * c;
        const auto expected = eval_symbol(symbols::ChiMinus{}, xi, sig) * std::exp(-z.z() * std::pow(std::sqrt(r2), 0.7));
        worst = std::max(worst, max_abs_diff(spectrum.at(q), expected));
    }
    checks.at_most("kernels.cauchy_plus_spectrum", worst, 1e-12);

    const auto f = white_noise(g, seed + 3);
    const auto same = semigroup_apply(f, 0.0, 0.0, 0.7);
    checks.add("semigroup.identity", rel(same, f), 0.0, same == f);
    checks.at_most("semigroup.composition",
                   rel(semigroup_apply(semigroup_apply(f, 0.3, 0.4, 0.7), 0.5, 0.4, 0.7), semigroup_apply(f, 0.8, 0.4, 0.7)),
                   1e-10);
    checks.at_most("semigroup.contraction", lp_norm(semigroup_apply(f, 0.4, 0.0, 0.7), 2.0) / lp_norm(f, 2.0), 1.0);
}

void cauchy_checks(Checks& checks, const GridSpec& g, double radius, std::uint64_t seed) {
    const auto f = pw::make_bandlimited(g, {radius, seed + 4, pw::modes::RandomBall{}});
    double worst = 0.0;
    for (double theta : {0.9, 1.0, 1.2}) {
        const FellerParams params(0.7, theta);
        for (double x0 : {0.5, -0.5}) {
            const double ratio = pde_residual(f, x0, 0.02, params) / pde_residual(f, x0, 0.01, params);
            worst = std::max(worst, std::abs(ratio - 4.0));
        }
    }
    checks.at_most("cauchy.residual_order_deviation_from_4", worst, 0.5);

    const FellerParams params(0.8, 1.1);
    const auto noise = white_noise(g, seed + 5);
    const auto fp = hardy_project(HardySign::Plus, noise);
    double previous = std::numeric_limits<double>::infinity(), worst_ratio = 0.0;
    for (double x0 : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const double err = l2_distance(solve_cauchy(noise, x0, params).field, fp);
        if (std::isfinite(previous)) worst_ratio = std::max(worst_ratio, err / previous);
        previous = err;
    }
    checks.add("cauchy.boundary_recovery_max_step_ratio", worst_ratio, 1.0, worst_ratio < 1.0);

    double sup = 0.0;
    for (double x0 : {1e-4, 1e-2, 0.1, 1.0, 10.0}) sup = std::max(sup, lp_norm(solve_cauchy(fp, x0, params).field, 2.0));
    checks.at_most("cauchy.hardy_sup_ratio", sup / lp_norm(fp, 2.0), 1.0 + 1e-8);
}

void paley_wiener_checks(Checks& checks, const GridSpec& g, double radius, int trials, std::uint64_t seed) {
    auto ball = [&](std::uint64_t s) { return pw::make_bandlimited(g, {radius, s, pw::modes::RandomBall{}}); };

    double worst = 0.0, control = std::numeric_limits<double>::infinity();
    for (std::uint64_t s = 0; s < 4; ++s) {
        const auto f = ball(seed + 10 + s);
        for (double alpha : {0.5, 1.0}) {
            for (double theta : {0.9, 1.0, 1.1}) {
                const FellerParams params(alpha, theta);
                const auto res = pw::bernstein_ratios(f, params, 2.0, 32);
                worst = std::max({worst, res.plus.fitted_constant, res.minus.fitted_constant});
                const auto neg = pw::bernstein_ratios(f, params, 2.0, 16, res.oracle_radius / 2.0);
                control = std::min({control, neg.plus.limit, neg.minus.limit});
            }
        }
    }
    checks.at_most("pw.bernstein_max_ratio", worst, 1.0 + 1e-10);
    checks.at_least("pw.bernstein_control_ratio_k16", control, 10.0);

    double l2_bins = 0.0, p4_bins = 0.0;
    bool monotone = true;
    for (std::uint64_t s = 0; s < 4; ++s) {
        const auto f = ball(seed + 20 + s);
        const FellerParams params(0.5, 0.3);
        const auto est = pw::bandwidth_estimate(f, params, 2.0, 64);
        l2_bins = std::max(l2_bins, std::abs(est.estimate - est.oracle_radius) / est.frequency_step);
        for (std::size_t i = 1; i < est.sequence.entries.size(); ++i) {
            monotone = monotone && est.sequence.entries[i].value >= est.sequence.entries[i - 1].value * (1.0 - 1e-12);
        }
        const auto est4 = pw::bandwidth_estimate(f, params, 4.0, 64);
        p4_bins = std::max(p4_bins, std::abs(est4.estimate - est4.oracle_radius) / est4.frequency_step);
    }
    checks.at_most("pw.bandwidth_error_bins_p2", l2_bins, 1.0);
    checks.add("pw.bandwidth_monotone_p2", monotone ? 1.0 : 0.0, 1.0, monotone);
    checks.at_most("pw.bandwidth_error_bins_p4", p4_bins, 3.0);

    {
        const auto f = ball(seed + 30);
        const FellerParams params(0.8, 1.1);
        const std::vector<double> x0s{-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0};
        const auto ext = pw::Extension::Entire;
        const auto profile = pw::exp_type_profile(f, params, 2.0, x0s, std::nullopt, ext);
        checks.at_most("pw.exp_type_constant", profile.fitted_constant, 1.0 + 1e-8);
        const auto point = pw::pointwise_exp_type(f, params, x0s, std::nullopt, ext);
        if (static_cast<double>(g.point_count()) * std::ldexp(1.0, 2 * g.n()) <= std::ldexp(1.0, 24)) {
            const auto fine = pw::refine(f, 2);
            const auto fine_profile = pw::exp_type_profile(fine, params, 2.0, x0s, std::nullopt, ext);
            const auto fine_point = pw::pointwise_exp_type(fine, params, x0s, std::nullopt, ext);
            checks.at_most("pw.exp_type_refinement_change",
                           std::abs(fine_profile.fitted_constant / profile.fitted_constant - 1.0), 0.05);
            checks.at_most("pw.pointwise_refinement_change", std::abs(fine_point.value / point.value - 1.0), 0.05);
        }
        const double low = 0.5 * profile.radius;
        const std::vector<double> near{-1.0, 0.0}, far{-8.0, -4.0, -1.0, 0.0};
        const FellerParams skew(1.0, 1.0);
        const double a = pw::pointwise_exp_type(f, skew, near, low, ext).value;
        const double b = pw::pointwise_exp_type(f, skew, far, low, ext).value;
        checks.at_least("pw.pointwise_control_growth", b / a, 10.0);
    }

    int failures = 0;
    const FellerParams params(0.6, 1.2);
    for (int t = 0; t < trials; ++t) {
        const auto f = ball(seed + 1000 + static_cast<std::uint64_t>(t));
        for (double p : {2.0, 4.0}) {
            for (auto [k, l] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
                failures += pw::lks_check(f, params, p, k, l).pass ? 0 : 1;
            }
        }
    }
    checks.add("pw.lks_failures", failures, 0.0, failures == 0);
    checks.at_most("pw.favard_K0_error", std::abs(pw::favard_constant(0).value - 1.0), 1e-8);
    checks.at_most("pw.favard_K1_error", std::abs(pw::favard_constant(1).value - M_PI / 2.0), 1e-8);
    checks.at_most("pw.favard_K2_error", std::abs(pw::favard_constant(2).value - M_PI * M_PI / 8.0), 1e-8);

    {
        const auto f = ball(seed + 40);
        const auto psi_hat = dft_forward(pw::make_urysohn_bump(g, radius, 0.25));
        auto product = dft_forward(f);
        for (std::size_t q = 0; q < g.point_count(); ++q) product.set(q, psi_hat.at(q) * product.at(q));
        checks.at_most("pw.urysohn_reproduction", rel(dft_inverse(product), f), 1e-12);

        const auto self = pw::pairing_bound(f, f, FellerParams(1.0, 1.0), 2.0, 0.0, 1.0);
        const double norm2 = std::pow(lp_norm(f, 2.0), 2);
        checks.at_most("pw.pairing_self", std::abs(self.pairing - norm2) / norm2, 1e-12);
        double holder = 0.0;
        for (int t = 0; t < 10; ++t) {
            const auto a = white_noise(g, seed + 50 + static_cast<std::uint64_t>(t));
            const auto b = white_noise(g, seed + 60 + static_cast<std::uint64_t>(t));
            for (double p : {1.5, 3.0}) {
                const double q = p / (p - 1.0);
                holder = std::max(holder, std::abs(field_pairing(a, b)) /
                                              (std::ldexp(1.0, g.n()) * lp_norm(a, p) * lp_norm(b, q)));
            }
        }
        checks.at_most("pw.pairing_holder_ratio", holder, 1.0 + 1e-12);
    }
}

void radial_checks(Checks& checks, const GridSpec& g, double radius) {
    const double eps = 0.25;
    const auto psi = pw::make_urysohn_bump(g, radius, eps);
    double worst = 0.0;
    for (double alpha : {0.5, 1.0}) {
        const double cap = std::pow(radius + eps, alpha);
        for (int m : {0, 1}) {
            const auto report = pw::radial_pw_bound(psi, alpha, m, 48);
            for (int k = 24; k < 48; ++k) {
                worst = std::max(worst, report.entries[k + 1].sup / report.entries[k].sup / cap);
            }
        }
    }
    checks.at_most("radial.pw_ratio_over_target", worst, 1.0 + 1e-3);

    const int n = g.n();
    const AlgebraSignature sig(n);
    const auto gauss = [](double r) { return std::exp(-r * r / 2.0); };
    const auto field = dft_inverse(SpectralField::from_function(g, sig, [&](std::span<const double> xi) {
        double r2 = 0.0;
        for (double c : xi) r2 += c * c;
        return Multivector::scalar(sig, gauss(std::sqrt(r2)));
    }));
    pw::RadialProfile profile{0.005, {}};
    for (int i = 0; i <= 2000; ++i) profile.values.push_back(gauss(i * profile.step));
    std::vector<double> radii;
    std::vector<std::size_t> points;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (std::size_t q = 0; q < g.point_count(); q += 37) {
        g.coordinates(q, x);
        double r2 = 0.0;
        for (double c : x) r2 += c * c;
        if (r2 > 16.0) continue;
        radii.push_back(std::sqrt(r2));
        points.push_back(q);
    }
    const auto values = pw::radial_fourier(profile, n, radii);
    const double peak = std::pow(GridSpec::kTwoPi, n / 2.0);
    double err = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        err = std::max(err, std::abs(values[i] - field.at(points[i])[0].real() * std::pow(GridSpec::kTwoPi, n)) / peak);
    }
    checks.at_most("radial.fourier_vs_lattice", err, 1e-4);

    pw::RadialProfile quad{0.05, {}};
    for (int i = 0; i < 40; ++i) quad.values.push_back(std::pow(i * quad.step, 2));
    double bessel = 0.0;
    for (double lambda : {-0.25, 0.0, 0.5, 2.0}) {
        for (double v : pw::bessel_operator_apply(quad, lambda).values) {
            bessel = std::max(bessel, std::abs(v - (4.0 * lambda + 4.0)));
        }
    }
    checks.at_most("radial.bessel_operator_quadratic", bessel, 1e-9);
}

}  // namespace

ExperimentReport run_verify(const ExperimentConfig& c) {
    ExperimentReport report;
    Checks checks(report);
    const GridSpec g = c.grid_spec();
    algebra_checks(checks, c.n, c.seed);
    operator_checks(checks, g, c.seed);
    kernel_checks(checks, g, c.seed);
    cauchy_checks(checks, g, c.radius, c.seed);
    paley_wiener_checks(checks, g, c.radius, c.trials, c.seed);
    radial_checks(checks, g, c.radius);
    int failed = 0;
    for (const auto& row : report.table.rows) failed += row[3].get<bool>() ? 0 : 1;
    report.summary = {{"checks", report.table.rows.size()}, {"failed", failed}};
    return report;
}

}  // namespace rfl::app
