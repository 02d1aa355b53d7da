#include <doctest.h>

#include <cmath>

#include "rfl/favard.hpp"
#include "rfl/paley_wiener.hpp"
#include "rfl/radial.hpp"
#include "test_support.hpp"

using namespace rfl;
using namespace rfl::pw;

namespace {

RadialProfile sample(double step, int count, const std::function<double(double)>& phi) {
    RadialProfile p{step, {}};
    for (int i = 0; i < count; ++i) p.values.push_back(phi(i * step));
    return p;
}

}  // namespace

TEST_CASE("radial_fourier matches the lattice transform of a radial Gaussian") {
    for (int n : {2, 3}) {
        CAPTURE(n);
        const GridSpec g = GridSpec::uniform(n, n == 2 ? 64 : 32, 0.5);
        const AlgebraSignature sig(n);
        const auto gauss = [](double r) { return std::exp(-r * r / 2.0); };
        const auto spectrum = SpectralField::from_function(g, sig, [&](std::span<const double> xi) {
            double r2 = 0.0;
            for (double c : xi) r2 += c * c;
            return Multivector::scalar(sig, gauss(std::sqrt(r2)));
        });
        // dft_inverse carries the (2 pi)^{-n} of the inverse transform.
        const auto field = dft_inverse(spectrum);
        const auto profile = sample(0.005, 2001, gauss);

        std::vector<double> x(static_cast<std::size_t>(n)), radii;
        std::vector<std::size_t> points;
        for (std::size_t q = 0; q < g.point_count(); q += 37) {
            g.coordinates(q, x);
            double r2 = 0.0;
            for (double c : x) r2 += c * c;
            if (r2 > 16.0) continue;
            radii.push_back(std::sqrt(r2));
            points.push_back(q);
        }
        const auto values = radial_fourier(profile, n, radii);
        const double peak = std::pow(2 * M_PI, n / 2.0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double lattice = field.at(points[i])[0].real() * std::pow(2 * M_PI, n);
            REQUIRE(std::abs(values[i] - lattice) <= 1e-4 * peak);
        }
        // Closed form (2 pi)^{n/2} exp(-r^2 / 2); the trapezoid rule is O(h^2) for even n.
        const std::vector<double> r1{1.3};
        CHECK(radial_fourier(profile, n, r1)[0] == doctest::Approx(peak * std::exp(-0.845)).epsilon(1e-5));
    }
}

TEST_CASE("radial_fourier zero and scaling") {
    const std::vector<double> radii{0.0, 0.5, 1.7};
    const RadialProfile zero{0.01, std::vector<double>(500, 0.0)};
    for (double v : radial_fourier(zero, 2, radii)) CHECK(v == 0.0);
    CHECK_THROWS_AS(radial_fourier(RadialProfile{0.01, {}}, 2, radii), std::invalid_argument);

    // phi(a rho) transforms to a^{-n} F(r / a).
    const double a = 1.7;
    const auto phi = [](double r) { return std::exp(-r * r) * (1.0 + r * r); };
    for (int n : {1, 2, 3}) {
        const auto base = sample(0.002, 4001, phi);
        const auto scaled = sample(0.002 / a, 4001, [&](double r) { return phi(a * r); });
        std::vector<double> over_a;
        for (double r : radii) over_a.push_back(r / a);
        const auto lhs = radial_fourier(scaled, n, radii);
        const auto rhs = radial_fourier(base, n, over_a);
        for (std::size_t i = 0; i < radii.size(); ++i) {
            CHECK(lhs[i] == doctest::Approx(std::pow(a, -n) * rhs[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("bessel_operator_apply") {
    const auto constant = sample(0.1, 20, [](double) { return 3.0; });
    for (double v : bessel_operator_apply(constant, 0.3).values) CHECK(v == doctest::Approx(0.0).scale(1.0));

    for (double lambda : {-0.25, 0.0, 0.5, 2.0}) {
        const auto quad = sample(0.05, 40, [](double r) { return r * r; });
        for (double v : bessel_operator_apply(quad, lambda).values) {
            CHECK(v == doctest::Approx(4.0 * lambda + 4.0).epsilon(1e-9));
        }
    }

    // J_lambda(rho) / rho^lambda is an eigenfunction with eigenvalue -1.
    for (double lambda : {0.0, 0.5, 1.0}) {
        CAPTURE(lambda);
        const auto eig = [lambda](double r) {
            if (r == 0.0) return 1.0 / (std::pow(2.0, lambda) * std::tgamma(lambda + 1.0));
            return std::cyl_bessel_j(lambda, r) / std::pow(r, lambda);
        };
        double previous = 0.0;
        for (double h : {0.02, 0.01}) {
            const auto p = sample(h, static_cast<int>(10.0 / h) + 1, eig);
            const auto out = bessel_operator_apply(p, lambda);
            double err = 0.0;
            for (std::size_t i = 0; i < p.values.size(); ++i) err = std::max(err, std::abs(out.values[i] + p.values[i]));
            CHECK(err < 5.0 * h * h);
            if (previous > 0.0) CHECK(previous / err == doctest::Approx(4.0).epsilon(0.1));
            previous = err;
        }
    }
    CHECK_THROWS_AS(bessel_operator_apply(RadialProfile{0.1, {1, 2, 3, 4}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_operator_apply(constant, -0.5), std::invalid_argument);
}

TEST_CASE("radial symmetry check") {
    const GridSpec g = GridSpec::uniform(2, 64, 0.5);
    CHECK(radial_asymmetry(make_urysohn_bump(g, 2.0, 0.25)) < 1e-12);
    CHECK(radial_asymmetry(make_bessel_radial(g, 2.0)) < 1e-12);
    CHECK(radial_asymmetry(CliffordField(g, AlgebraSignature(2))) == 0.0);
    const auto noisy = make_bandlimited(g, {2.0, 1, modes::RandomBall{}});
    CHECK(radial_asymmetry(noisy) > 1e-3);
    CHECK_THROWS_AS(radial_pw_bound(noisy, 1.0, 0, 4), std::invalid_argument);
}

TEST_CASE("radial Paley-Wiener growth") {
    const GridSpec g = GridSpec::uniform(2, 64, 0.5);
    const auto psi = make_urysohn_bump(g, 2.0, 0.25);
    double s0 = 0.0;
    for (std::size_t q = 0; q < g.point_count(); ++q) s0 = std::max(s0, mv_norm0(psi.at(q)));
    for (int m : {0, 1}) {
        CAPTURE(m);
        for (double alpha : {0.5, 1.0}) {
            CAPTURE(alpha);
            const auto report = radial_pw_bound(psi, alpha, m, 48);
            REQUIRE(report.entries.size() == 49);
            CHECK(report.radius <= 2.25);
            if (m == 0) CHECK(report.entries[0].sup == doctest::Approx(s0));
            CHECK(report.entries[0].sup >= s0);
            const double cap = std::pow(2.25, alpha);
            for (int k = 24; k < 48; ++k) {
                CHECK(report.entries[k + 1].sup / report.entries[k].sup <= cap * (1.0 + 1e-3));
            }
            CHECK(std::isfinite(report.fitted_lambda));
            CHECK(report.entries[1].side_condition == (alpha > 2.0 * m - 1.0));
            CHECK(report.entries[48].side_condition);
        }
    }
    // The weighted m = 1 growth reaches (R + eps)^alpha within 2% by k = 48 on this lattice.
    for (double alpha : {0.5, 1.0}) {
        const auto report = radial_pw_bound(psi, alpha, 1, 48);
        CHECK(report.entries[48].growth == doctest::Approx(std::pow(2.25, alpha)).epsilon(0.02));
    }
    CHECK_THROWS_AS(radial_pw_bound(psi, 1.5, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(radial_pw_bound(psi, 1.0, -1, 4), std::invalid_argument);
}

TEST_CASE("Favard constants") {
    CHECK(std::abs(favard_constant(0).value - 1.0) < 1e-8);
    CHECK(std::abs(favard_constant(1).value - M_PI / 2.0) < 1e-8);
    CHECK(std::abs(favard_constant(2).value - M_PI * M_PI / 8.0) < 1e-8);
    CHECK(std::abs(favard_constant(3).value - std::pow(M_PI, 3) / 24.0) < 1e-8);
    for (int j = 0; j < 12; ++j) {
        const auto t = favard_constant(j);
        CHECK(t.j == j);
        CHECK(t.terms == 2000);
        CHECK(t.value >= 1.0 - 1e-12);
        CHECK(t.value <= M_PI / 2.0 + 1e-12);
        CHECK(t.remainder_bound >= 0.0);
        CHECK(t.remainder_bound < 1e-8);
    }
    // Few terms: the recorded bound still brackets the true value.
    const auto rough = favard_constant(1, 10);
    CHECK(std::abs(rough.value - M_PI / 2.0) <= rough.remainder_bound);
    CHECK_THROWS_AS(favard_constant(-1), std::invalid_argument);
    CHECK_THROWS_AS(favard_constant(1, 0), std::invalid_argument);

    CHECK(lks_constant(0, 3) == doctest::Approx(1.0));
    CHECK(lks_constant(2, 2) == doctest::Approx(1.0));
    CHECK(lks_constant(1, 2) == doctest::Approx(std::pow(M_PI / 2.0, 2) / (M_PI * M_PI / 8.0)));
    CHECK_THROWS_AS(lks_constant(3, 2), std::invalid_argument);
}
