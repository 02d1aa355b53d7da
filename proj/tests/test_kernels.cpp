#include <doctest.h>

#include <cmath>
#include <limits>

#include "rfl/kernels.hpp"
#include "test_support.hpp"

using namespace rfl;
namespace sym = rfl::symbols;

namespace {

const Complex kI{0.0, 1.0};

template <Domain D>
double rel(const Field<D>& a, const Field<D>& b) {
    return testing::relative_max_error(a, b);
}

// Low-pass random field: white noise smoothed by the heat multiplier.
CliffordField smooth_field(const GridSpec& g, std::uint64_t seed) {
    return semigroup_apply(testing::random_zero_mean_field(g, seed), 1.0, 0.0, 1.0);
}

double l2_distance(const CliffordField& a, const CliffordField& b) {
    auto d = a;
    d -= b;
    return lp_norm(d, 2.0);
}

}  // namespace

TEST_CASE("kernel_K has the characteristic function as spectrum") {
    const GridSpec g = GridSpec::uniform(2, 32, 0.3);
    const AlgebraSignature sig(2);
    for (double alpha : {0.5, 1.0}) {
        for (double gamma : {0.0, 0.4}) {
            const ComplexEvolutionTime z{0.8, gamma};
            const auto spectrum = dft_forward(kernel_K(g, z, alpha));
            std::vector<double> xi(2);
            for (std::size_t q = 0; q < g.point_count(); ++q) {
                g.frequencies(q, xi);
                const double r = std::hypot(xi[0], xi[1]);
                const Complex expected = std::exp(-z.z() * std::pow(r, alpha));
                REQUIRE(max_abs_diff(spectrum.at(q), Multivector::scalar(sig, expected)) < 1e-12);
            }
            std::vector<int> centre{16, 16};
            CHECK(max_abs_diff(spectrum.at(g.linear_index(centre)), Multivector::scalar(sig, 1.0)) < 1e-13);
        }
    }
}

TEST_CASE("kernel_K rejects Re(z) <= 0") {
    const GridSpec g = GridSpec::uniform(1, 16, 0.5);
    CHECK_THROWS_AS(kernel_K(g, {0.0, 0.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(kernel_K(g, {1.0, 1.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(kernel_K(g, {1.0, -1.5}, 1.0), std::domain_error);
    CHECK_NOTHROW(kernel_K(g, {1.0, 4.5}, 1.0));
    CHECK_THROWS_AS(kernel_K(g, {1.0, 0.0}, 1.5), std::invalid_argument);
}

TEST_CASE("cauchy_kernel_closed examples") {
    const std::vector<double> origin{0.0};
    const auto e = cauchy_kernel_closed(origin, 1.0);
    CHECK(max_abs_diff(e, Multivector::scalar(AlgebraSignature(1), 1.0 / (2 * M_PI))) < 1e-16);
    CHECK_THROWS_AS(cauchy_kernel_closed(origin, 0.0), std::domain_error);
    CHECK_THROWS_AS(cauchy_kernel_closed(origin, -1.0), std::domain_error);

    const AlgebraSignature sig(3);
    const std::vector<double> x{0.3, -1.1, 0.7};
    const std::vector<double> mx{-0.3, 1.1, -0.7};
    const auto a = cauchy_kernel_closed(x, 0.6);
    const auto b = cauchy_kernel_closed(mx, 0.6);
    CHECK(a[0] == b[0]);
    for (int j = 1; j <= 3; ++j) CHECK(a[generator_blade(j)] == -b[generator_blade(j)]);

    const double lambda = 2.5;
    const std::vector<double> sx{0.3 * lambda, -1.1 * lambda, 0.7 * lambda};
    CHECK(max_abs_diff(cauchy_kernel_closed(sx, 0.6 * lambda), a * std::pow(lambda, -3.0)) < 1e-15);
    CHECK(omega(1) == doctest::Approx(M_PI));
    CHECK(omega(2) == doctest::Approx(2 * M_PI));
    CHECK(cauchy_kernel_closed(x, 0.6) == cauchy_kernel_formula(x, 0.6));
}

TEST_CASE("generalized Cauchy kernels") {
    const GridSpec g = GridSpec::uniform(2, 32, 0.4);
    const AlgebraSignature sig(2);
    const ComplexEvolutionTime z{0.7, 0.3};
    const double alpha = 0.6;
    const auto k = kernel_K(g, z, alpha);
    const auto plus = cauchy_kernel_pm(g, z, alpha, HardySign::Plus);
    const auto minus = cauchy_kernel_pm(g, z, alpha, HardySign::Minus);
    CHECK(rel(plus + minus, k) < 1e-13);

    const auto spectrum = dft_forward(plus);
    std::vector<double> xi(2);
    for (std::size_t q = 0; q < g.point_count(); ++q) {
        g.frequencies(q, xi);
        const double r = std::hypot(xi[0], xi[1]);
        const auto expected = eval_symbol(sym::ChiMinus{}, xi, sig) * std::exp(-z.z() * std::pow(r, alpha));
        REQUIRE(max_abs_diff(spectrum.at(q), expected) < 1e-12);
    }
}

TEST_CASE("alpha = 1 kernels match the closed forms") {
    for (int n : {1, 2}) {
        for (double t : {0.5, 1.0}) {
            CAPTURE(n);
            CAPTURE(t);
            const auto box = default_kernel_box(n);
            const auto cmp = compare_kernel_closed_form(n, t, box.samples, box.box_factor);
            CHECK(cmp.extent >= 40.0 * t);
            CHECK(cmp.poisson_error <= 1e-2);
            CHECK(cmp.cauchy_plus_error <= 1e-2);
            CHECK(cmp.cauchy_minus_error <= 1e-2);
        }
    }
    CHECK_THROWS_AS(compare_kernel_closed_form(1, 0.0, 64), std::invalid_argument);
    CHECK_THROWS_AS(compare_kernel_closed_form(1, 1.0, 64, 20.0), std::invalid_argument);
}

TEST_CASE("semigroup_apply") {
    const GridSpec g = GridSpec::uniform(2, 32, 0.4);
    const auto f = testing::random_field(g, 3);
    CHECK(semigroup_apply(f, 0.0, 0.3, 0.7) == f);
    for (double gamma : {0.0, 0.5}) {
        const auto two_step = semigroup_apply(semigroup_apply(f, 0.3, gamma, 0.7), 0.5, gamma, 0.7);
        CHECK(rel(two_step, semigroup_apply(f, 0.8, gamma, 0.7)) < 1e-10);
    }
    CHECK(lp_norm(semigroup_apply(f, 0.4, 0.0, 0.5), 2.0) <= lp_norm(f, 2.0));
    CHECK_THROWS_AS(semigroup_apply(f, -0.1, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(semigroup_apply(f, 1.0, 2.5, 1.0), std::invalid_argument);
}

TEST_CASE("solve_cauchy branches") {
    const GridSpec g = GridSpec::uniform(2, 32, 0.4);
    const AlgebraSignature sig(2);
    const auto f = testing::random_field(g, 12);
    const FellerParams params(0.8, 1.2);

    const auto at_zero = solve_cauchy(f, 0.0, params);
    CHECK(at_zero.field == f);
    CHECK(at_zero.x0 == 0.0);

    try {
        solve_cauchy(f, -0.5, FellerParams(0.8, 0.0));
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("|1 - theta| < alpha/2") != std::string::npos);
    }
    CHECK_NOTHROW(solve_cauchy(f, 0.5, FellerParams(0.8, 0.0)));

    // Plane wave pushed into each Hardy eigenspace.
    const std::vector<int> offsets{3, -2};
    std::vector<double> xi_m{3 * g.frequency_step(0), -2 * g.frequency_step(1)};
    const double r = std::hypot(xi_m[0], xi_m[1]);
    std::mt19937_64 rng(4);
    const auto lambda = testing::random_multivector(sig, rng);
    const auto wave = CliffordField::from_function(g, sig, [&](std::span<const double> x) {
        return lambda * std::polar(1.0, x[0] * xi_m[0] + x[1] * xi_m[1]);
    });
    const auto wave_plus = hardy_project(HardySign::Plus, wave);
    const auto wave_minus = hardy_project(HardySign::Minus, wave);

    auto expected = wave_plus;
    expected *= std::exp(-0.7 * std::pow(r, 0.8));
    CHECK(rel(solve_cauchy(wave_plus, 0.7, params).field, expected) < 1e-12);
    CHECK(solve_cauchy(wave_minus, 0.7, params).field.max_norm0() < 1e-12 * wave.max_norm0());

    expected = wave_minus;
    expected *= std::exp(0.7 * std::exp(-kI * (M_PI * 1.2)) * std::pow(r, 0.8));
    CHECK(rel(solve_cauchy(wave_minus, -0.7, params).field, expected) < 1e-12);
    CHECK(solve_cauchy(wave_plus, -0.7, params).field.max_norm0() < 1e-12 * wave.max_norm0());

    // Decay on the zero-mean upper component.
    const auto fz = hardy_project(HardySign::Plus, testing::random_zero_mean_field(g, 13));
    double previous = lp_norm(fz, 2.0);
    for (double x0 : {1.0, 5.0, 25.0, 125.0}) {
        const double norm = lp_norm(solve_cauchy(fz, x0, params).field, 2.0);
        CHECK(norm <= previous);
        previous = norm;
    }
    CHECK(previous < 1e-6 * lp_norm(fz, 2.0));
}

TEST_CASE("Hardy-space sup bound on the upper branch") {
    const GridSpec g = GridSpec::uniform(2, 32, 0.4);
    const auto fp = hardy_project(HardySign::Plus, testing::random_field(g, 21));
    const FellerParams params(0.6, 0.9);
    const double bound = lp_norm(fp, 2.0) * (1.0 + 1e-8);
    for (double x0 : {1e-4, 1e-2, 0.1, 1.0, 10.0}) {
        CHECK(lp_norm(solve_cauchy(fp, x0, params).field, 2.0) <= bound);
    }
}

TEST_CASE("pde_residual is second order in the step") {
    const GridSpec g = GridSpec::uniform(2, 32, 0.4);
    const auto f = smooth_field(g, 5);
    for (double theta : {0.9, 1.0, 1.2}) {
        const FellerParams params(0.7, theta);
        for (double x0 : {0.5, -0.5}) {
            CAPTURE(theta);
            CAPTURE(x0);
            const double coarse = pde_residual(f, x0, 0.02, params);
            const double fine = pde_residual(f, x0, 0.01, params);
            CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
            CHECK(pde_residual(f, x0, default_residual_step(x0), params) < fine);
        }
    }
    const FellerParams params(0.7, 1.0);
    CHECK_THROWS_AS(pde_residual(f, 0.01, 0.02, params), std::invalid_argument);
    CHECK_THROWS_AS(pde_residual(f, 0.5, 0.0, params), std::invalid_argument);
    CHECK_THROWS_AS(pde_residual(f, -0.5, 0.01, FellerParams(0.7, 0.0)), std::invalid_argument);
    CHECK(default_residual_step(0.2) == 1e-3);
    CHECK(default_residual_step(-4.0) == doctest::Approx(4e-3));
}

TEST_CASE("theta = 0 residual equals the heat-type check") {
    const GridSpec g = GridSpec::uniform(2, 32, 0.4);
    const auto f = smooth_field(g, 8);
    const double alpha = 0.6, x0 = 0.4, delta = 0.01;
    const auto fp = hardy_project(HardySign::Plus, f);
    auto heat = semigroup_apply(fp, x0 + delta, 0.0, alpha);
    heat -= semigroup_apply(fp, x0 - delta, 0.0, alpha);
    heat *= 1.0 / (2.0 * delta);
    heat += apply_operator(sym::RieszDerivative{alpha}, semigroup_apply(fp, x0, 0.0, alpha));
    const double expected = lp_norm(heat, 2.0);
    CHECK(pde_residual(f, x0, delta, FellerParams(alpha, 0.0)) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("boundary recovery is monotone as x0 -> 0+") {
    const GridSpec g = GridSpec::uniform(2, 32, 0.4);
    const auto f = testing::random_field(g, 17);
    const auto fp = hardy_project(HardySign::Plus, f);
    const FellerParams params(0.8, 1.1);
    double previous = std::numeric_limits<double>::infinity();
    for (double x0 : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const double err = l2_distance(solve_cauchy(f, x0, params).field, fp);
        CHECK(err < previous);
        previous = err;
    }
    CHECK(previous < 1e-2 * lp_norm(fp, 2.0));
}

TEST_CASE("evolve_schedule") {
    const GridSpec g = GridSpec::uniform(2, 16, 0.5);
    const auto f = smooth_field(g, 2);
    const FellerParams params(1.0, 1.0);
    const std::vector<double> schedule{0.0, 0.25, -0.25};
    const auto rows = evolve_schedule(f, params, 2.0, schedule);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].norm == doctest::Approx(lp_norm(f, 2.0)));
    CHECK(std::isnan(rows[0].residual));
    CHECK(rows[1].residual < 1e-4);
    CHECK(rows[2].residual < 1e-4);
    CHECK(rows[1].norm == doctest::Approx(lp_norm(solve_cauchy(f, 0.25, params).field, 2.0)));

    const std::vector<double> bad{0.1, -0.1};
    CHECK_THROWS_AS(evolve_schedule(f, FellerParams(1.0, 0.0), 2.0, bad), std::invalid_argument);
}
