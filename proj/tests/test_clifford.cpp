#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rfl/clifford.hpp"
#include "test_support.hpp"

using namespace rfl;

namespace {

// Independent oracle: multiply generator words by bubble-sorting the
// concatenation and contracting equal neighbours with e_j^2 = -1.
std::pair<int, std::vector<int>> word_product(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                sign = -sign;
                changed = true;
            } else if (a[i] == a[i + 1]) {
                a.erase(a.begin() + static_cast<long>(i), a.begin() + static_cast<long>(i) + 2);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    return {sign, a};
}

std::vector<int> word_of(BladeIndex mask) {
    std::vector<int> w;
    for (int j = 0; j < 12; ++j) {
        if (mask & (1u << j)) w.push_back(j + 1);
    }
    return w;
}

BladeIndex mask_of(const std::vector<int>& w) {
    BladeIndex m = 0;
    for (int j : w) m |= generator_blade(j);
    return m;
}

}  // namespace

TEST_CASE("blade_product matches the documented examples") {
    const BladeIndex e1 = generator_blade(1), e2 = generator_blade(2);
    auto p = blade_product(e1, e2);
    CHECK(p.sign == 1);
    CHECK(p.blade == (e1 | e2));
    p = blade_product(e1, e1);
    CHECK(p.sign == -1);
    CHECK(p.blade == 0u);
    p = blade_product(e2, e1);
    CHECK(p.sign == -1);
    CHECK(p.blade == (e1 | e2));
}

TEST_CASE("blade_product agrees with the generator-word oracle for n = 5") {
    for (BladeIndex a = 0; a < 32; ++a) {
        for (BladeIndex b = 0; b < 32; ++b) {
            const auto [sign, word] = word_product(word_of(a), word_of(b));
            const auto p = blade_product(a, b);
            REQUIRE(p.sign == sign);
            REQUIRE(p.blade == mask_of(word));
        }
    }
}

TEST_CASE("mv_multiply examples") {
    const AlgebraSignature sig(2);
    const auto e0 = Multivector::scalar(sig, 1.0);
    const auto e1 = Multivector::generator(sig, 1);
    const auto e2 = Multivector::generator(sig, 2);
    CHECK(e1 * e2 == Multivector::blade(sig, 0b11));

    std::mt19937_64 rng(3);
    const auto lambda = testing::random_multivector(sig, rng);
    CHECK(e0 * lambda == lambda);
    CHECK(lambda * e0 == lambda);

    const auto s = e1 + e2;
    CHECK(s * s == Multivector::scalar(sig, -2.0));
}

TEST_CASE("signature mismatch is an input error") {
    const AlgebraSignature two(2), three(3);
    CHECK_THROWS_AS(Multivector::scalar(two, 1.0) * Multivector::scalar(three, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(mv_inner(Multivector(two), Multivector(three)), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraSignature(0), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraSignature(13), std::invalid_argument);
    CHECK_THROWS_AS(Multivector(two, std::vector<Complex>(3)), std::invalid_argument);
}

TEST_CASE("mv_dagger examples") {
    const AlgebraSignature sig(2);
    const Complex i{0.0, 1.0};
    CHECK(mv_dagger(Multivector::generator(sig, 1)) == -Multivector::generator(sig, 1));
    CHECK(mv_dagger(Multivector::scalar(sig, 1.0)) == Multivector::scalar(sig, 1.0));
    CHECK(mv_dagger(Multivector::generator(sig, 1) * i) == Multivector::generator(sig, 1) * i);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto lambda = testing::random_multivector(sig, rng);
        double sum = 0.0;
        for (auto c : lambda.coeffs()) sum += std::norm(c);
        CHECK((lambda * mv_dagger(lambda)).scalar_part().real() == doctest::Approx(sum).epsilon(1e-12));
    }
}

TEST_CASE("mv_norm0 examples") {
    CHECK(mv_norm0(Multivector::scalar(AlgebraSignature(2), 1.0)) == doctest::Approx(2.0));
    CHECK(mv_norm0(Multivector(AlgebraSignature(3))) == 0.0);
    const AlgebraSignature one(1);
    CHECK(mv_norm0(Multivector::scalar(one, 1.0) + Multivector::generator(one, 1)) == doctest::Approx(2.0));
}

TEST_CASE("mv_inner examples") {
    const AlgebraSignature sig(2);
    const auto e1 = Multivector::generator(sig, 1);
    const auto e2 = Multivector::generator(sig, 2);
    CHECK(mv_inner(e1, e1) == Complex(4.0));
    CHECK(mv_inner(e1, e2) == Complex(0.0));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto lambda = testing::random_multivector(sig, rng);
        const double n0 = mv_norm0(lambda);
        CHECK(mv_inner(lambda, lambda).real() == doctest::Approx(n0 * n0).epsilon(1e-12));
        CHECK(std::abs(mv_inner(lambda, lambda).imag()) < 1e-12 * n0 * n0);

        // Real inputs: scalar part of 2^n lambda mu^dagger.
        const auto a = testing::random_multivector(sig, rng, true);
        const auto b = testing::random_multivector(sig, rng, true);
        const auto via_product = 4.0 * (a * mv_dagger(b)).scalar_part();
        CHECK(std::abs(mv_inner(a, b) - via_product) < 1e-12 * (1.0 + std::abs(via_product)));
    }
}

TEST_CASE("algebra properties hold on random samples") {
    std::mt19937_64 rng(20240601);
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const AlgebraSignature sig(n);
        const auto e0 = Multivector::scalar(sig, 1.0);
        for (int j = 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) {
                const auto ej = Multivector::generator(sig, j);
                const auto ek = Multivector::generator(sig, k);
                CHECK(ej * ek + ek * ej == e0 * (j == k ? -2.0 : 0.0));
            }
        }
        for (int trial = 0; trial < 2500; ++trial) {
            const auto a = testing::random_multivector(sig, rng);
            const auto b = testing::random_multivector(sig, rng);
            const auto c = testing::random_multivector(sig, rng);
            const double na = mv_norm0(a), nb = mv_norm0(b);
            REQUIRE(mv_norm0(a * b) <= na * nb * (1.0 + 1e-12));
            REQUIRE(mv_norm0(a + b) <= (na + nb) * (1.0 + 1e-12));
            REQUIRE(max_abs_diff((a * b) * c, a * (b * c)) <= 1e-12 * na * nb * mv_norm0(c));

            const auto ra = testing::random_multivector(sig, rng, true);
            const auto rb = testing::random_multivector(sig, rng, true);
            REQUIRE(max_abs_diff(mv_dagger(ra * rb), mv_dagger(rb) * mv_dagger(ra)) <= 1e-12 * mv_norm0(ra) * mv_norm0(rb));

            std::vector<double> x(static_cast<std::size_t>(n));
            std::normal_distribution<double> normal;
            double len2 = 0.0;
            for (auto& v : x) {
                v = normal(rng);
                len2 += v * v;
            }
            const auto xv = Multivector::vector(sig, x);
            REQUIRE(max_abs_diff(xv * xv, e0 * (-len2)) <= 1e-12 * len2);
        }
    }
}
