#include <doctest.h>

#include <cmath>
#include <random>

#include "rfl/operators.hpp"
#include "test_support.hpp"

using namespace rfl;
namespace sym = rfl::symbols;

namespace {

const Complex kI{0.0, 1.0};

template <Domain D>
double rel(const Field<D>& a, const Field<D>& b) {
    return testing::relative_max_error(a, b);
}

}  // namespace

TEST_CASE("FellerParams validates order and flags admissibility") {
    CHECK_THROWS_AS(FellerParams(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FellerParams(1.5, 1.0), std::invalid_argument);
    CHECK(FellerParams(1.0, 1.0).cauchy_admissible());
    CHECK(FellerParams(0.5, 1.2).cauchy_admissible());
    CHECK_FALSE(FellerParams(0.5, 1.3).cauchy_admissible());
    CHECK_FALSE(FellerParams(1.0, 0.0).cauchy_admissible());
    CHECK_NOTHROW(FellerParams(0.7, -3.0));
}

TEST_CASE("eval_symbol examples") {
    const AlgebraSignature sig(2);
    const std::vector<double> xi{0.6, -0.8};
    CHECK(max_abs_diff(eval_symbol(sym::HTheta{0.0}, xi, sig), Multivector::scalar(sig, 1.0)) < 1e-15);

    // theta = 1: -i xi/|xi|, so RieszFeller(1,1) equals the Dirac symbol.
    const auto h1 = eval_symbol(sym::HTheta{1.0}, xi, sig);
    CHECK(max_abs_diff(h1, Multivector::vector(sig, xi) * (-kI)) < 1e-15);
    const std::vector<double> xi2{1.5, 2.0};
    CHECK(max_abs_diff(eval_symbol(sym::RieszFeller{1.0, 1.0}, xi2, sig), eval_symbol(sym::Dirac{}, xi2, sig)) < 1e-14);

    const auto sum = eval_symbol(sym::ChiPlus{}, xi2, sig) + eval_symbol(sym::ChiMinus{}, xi2, sig);
    CHECK(max_abs_diff(sum, Multivector::scalar(sig, 1.0)) < 1e-15);

    const std::vector<double> zero{0.0, 0.0};
    CHECK(eval_symbol(sym::ChiPlus{}, zero, sig) == Multivector::scalar(sig, 0.5));
    CHECK(eval_symbol(sym::RieszHilbert{}, zero, sig) == Multivector(sig));
    const auto custom = Multivector::generator(sig, 2);
    CHECK(eval_symbol(sym::RieszHilbert{}, zero, sig, custom) == custom);
}

TEST_CASE("h_theta equals chi_- + e^{-i pi theta} chi_+ and is a pointwise isometry") {
    const AlgebraSignature sig(3);
    std::mt19937_64 rng(8);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 500; ++trial) {
        const double theta = 4.0 * normal(rng);
        std::vector<double> xi{normal(rng), normal(rng), normal(rng)};
        const auto h = eval_symbol(sym::HTheta{theta}, xi, sig);
        const auto mix = eval_symbol(sym::ChiMinus{}, xi, sig) +
                         eval_symbol(sym::ChiPlus{}, xi, sig) * std::exp(-kI * (M_PI * theta));
        REQUIRE(max_abs_diff(h, mix) < 1e-14);
        const auto lambda = testing::random_multivector(sig, rng);
        REQUIRE(mv_norm0(h * lambda) == doctest::Approx(mv_norm0(lambda)).epsilon(1e-12));
    }
}

TEST_CASE("operator identities on a 2-D grid") {
    const GridSpec g = GridSpec::uniform(2, 32, 0.4);
    const AlgebraSignature sig(2);
    const auto f = testing::random_zero_mean_field(g, 2024);
    const auto f_any = testing::random_field(g, 99);

    SUBCASE("Riesz derivative is the theta = 0 Riesz-Feller operator") {
        for (double alpha : {0.3, 0.5, 1.0}) {
            CHECK(rel(apply_operator(sym::RieszFeller{alpha, 0.0}, f_any), apply_operator(sym::RieszDerivative{alpha}, f_any)) < 1e-12);
        }
    }
    SUBCASE("H^2 = I on zero-mean fields") {
        CHECK(rel(apply_operator(sym::RieszHilbert{}, apply_operator(sym::RieszHilbert{}, f)), f) < 1e-12);
    }
    SUBCASE("D^2 = -Delta") {
        const Symbol laplace = [&](std::span<const double> xi) {
            return Multivector::scalar(sig, xi[0] * xi[0] + xi[1] * xi[1]);
        };
        CHECK(rel(apply_operator(sym::Dirac{}, apply_operator(sym::Dirac{}, f_any)), apply_multiplier(laplace, f_any)) < 1e-12);
    }
    SUBCASE("H = sum_j e_j R_j") {
        CliffordField sum(g, sig);
        for (int j = 1; j <= 2; ++j) {
            sum += left_multiply(Multivector::generator(sig, j), apply_operator(sym::DirectionalRiesz{j}, f_any));
        }
        CHECK(rel(sum, apply_operator(sym::RieszHilbert{}, f_any)) < 1e-12);
    }
    SUBCASE("D_1^1 = D") {
        CHECK(rel(apply_operator(sym::RieszFeller{1.0, 1.0}, f_any), apply_operator(sym::Dirac{}, f_any)) < 1e-12);
    }
}

TEST_CASE("Hardy projections split, are idempotent and annihilate each other") {
    const GridSpec g = GridSpec::uniform(2, 32, 0.4);
    const auto f_any = testing::random_field(g, 5);
    const auto f = testing::random_zero_mean_field(g, 6);
    const auto plus = hardy_project(HardySign::Plus, f_any);
    const auto minus = hardy_project(HardySign::Minus, f_any);
    CHECK(rel(plus + minus, f_any) < 1e-13);
    // Idempotence fails only at the DC bin, where both symbols are 1/2.
    const auto fp = hardy_project(HardySign::Plus, f);
    const auto fm = hardy_project(HardySign::Minus, f);
    CHECK(rel(hardy_project(HardySign::Plus, fp), fp) < 1e-12);
    CHECK(rel(hardy_project(HardySign::Minus, fm), fm) < 1e-12);
    CHECK(hardy_project(HardySign::Plus, hardy_project(HardySign::Minus, f)).max_norm0() < 1e-12 * f.max_norm0());
    CHECK(hardy_project(HardySign::Minus, hardy_project(HardySign::Plus, f)).max_norm0() < 1e-12 * f.max_norm0());

    // f_+ = (f + Hf)/2 away from the DC bin.
    auto expected = f + apply_operator(sym::RieszHilbert{}, f);
    expected *= 0.5;
    CHECK(rel(hardy_project(HardySign::Plus, f), expected) < 1e-12);
}

TEST_CASE("riesz_feller_power") {
    const GridSpec g = GridSpec::uniform(2, 16, 0.5);
    const auto f = testing::random_field(g, 31);
    const FellerParams params(0.7, 1.15);

    CHECK(riesz_feller_power(params, 0, f) == f);
    CHECK(rel(riesz_feller_power(params, 1, f), apply_operator(sym::RieszFeller{0.7, 1.15}, f)) < 1e-12);
    CHECK_THROWS_AS(riesz_feller_power(params, -1, f), std::invalid_argument);

    auto composed = f;
    for (int k = 1; k <= 8; ++k) {
        composed = apply_operator(sym::RieszFeller{0.7, 1.15}, composed);
        CAPTURE(k);
        CHECK(rel(riesz_feller_power(params, k, f), composed) < 1e-8);
    }

    // Eigen-behaviour on the Hardy components.
    const auto fp = hardy_project(HardySign::Plus, f);
    const auto fm = hardy_project(HardySign::Minus, f);
    for (int k : {1, 3, 6}) {
        const double ak = 0.7 * k;
        CHECK(rel(riesz_feller_power(params, k, fp), apply_operator(sym::RieszDerivative{ak}, fp)) < 1e-12);
        auto expected = apply_operator(sym::RieszDerivative{ak}, fm);
        expected *= std::exp(-kI * (M_PI * k * 1.15));
        CHECK(rel(riesz_feller_power(params, k, fm), expected) < 1e-12);
    }
}

TEST_CASE("riesz_kernel_eval") {
    const std::vector<double> one{1.0};
    CHECK(riesz_kernel_eval(1, one) == doctest::Approx(1.0 / M_PI));
    const std::vector<double> minus{-1.0};
    CHECK(riesz_kernel_eval(1, minus) == doctest::Approx(-1.0 / M_PI));
    const std::vector<double> x2{1.0, 0.0};
    CHECK(riesz_kernel_eval(1, x2) == doctest::Approx(1.0 / (2.0 * M_PI)));
    CHECK(riesz_kernel_eval(2, x2) == 0.0);
    const std::vector<double> origin{0.0, 0.0};
    CHECK_THROWS_AS(riesz_kernel_eval(1, origin), std::domain_error);
    CHECK_THROWS_AS(riesz_kernel_eval(3, x2), std::invalid_argument);
}
