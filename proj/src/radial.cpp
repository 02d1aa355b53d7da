#include "rfl/radial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rfl/operators.hpp"
#include "rfl/paley_wiener.hpp"

namespace rfl::pw {

namespace {

// Radial symmetry is judged up to this fraction of max |psi|_0.
constexpr double kRadialTolerance = 1e-6;

// J_nu(z) / z^nu with nu = n/2 - 1, continuous at z = 0.
double normalized_bessel(int n, double z) {
    const double nu = n / 2.0 - 1.0;
    if (n == 1) return std::sqrt(2.0 / M_PI) * std::cos(z);
    if (z == 0.0) return 1.0 / (std::pow(2.0, nu) * std::tgamma(nu + 1.0));
    return std::cyl_bessel_j(nu, z) / std::pow(z, nu);
}

}  // namespace

std::vector<double> radial_fourier(const RadialProfile& profile, int n, std::span<const double> radii) {
    if (profile.values.empty()) throw std::invalid_argument("radial_fourier: empty profile");
    if (n < 1) throw std::invalid_argument("radial_fourier: dimension must be >= 1");
    if (!(profile.step > 0.0)) throw std::invalid_argument("radial_fourier: step must be > 0");
    const double prefactor = std::pow(GridSpec::kTwoPi, n / 2.0);
    const std::size_t count = profile.values.size();
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        double sum = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const double rho = static_cast<double>(i) * profile.step;
            const double w = (i == 0 || i + 1 == count) ? 0.5 : 1.0;
            sum += w * profile.values[i] * std::pow(rho, n - 1) * normalized_bessel(n, rho * r);
        }
        out.push_back(prefactor * sum * profile.step);
    }
    return out;
}

RadialProfile bessel_operator_apply(const RadialProfile& profile, double lambda) {
    if (!(lambda > -0.5)) throw std::invalid_argument("bessel_operator_apply: requires lambda > -1/2");
    const auto& v = profile.values;
    const std::size_t count = v.size();
    if (count < 5) throw std::invalid_argument("bessel_operator_apply: needs at least 5 samples");
    const double h = profile.step;
    const double h2 = h * h;
    const double c = 2.0 * lambda + 1.0;
    RadialProfile out{h, std::vector<double>(count)};
    // Even extension: phi(-h) = phi(h).
    out.values[0] = 2.0 * (lambda + 1.0) * (2.0 * (v[1] - v[0]) / h2);
    for (std::size_t i = 1; i + 1 < count; ++i) {
        const double rho = static_cast<double>(i) * h;
        const double d2 = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / h2;
        const double d1 = (v[i + 1] - v[i - 1]) / (2.0 * h);
        out.values[i] = d2 + c / rho * d1;
    }
    const std::size_t e = count - 1;
    const double rho = static_cast<double>(e) * h;
    const double d2 = (2.0 * v[e] - 5.0 * v[e - 1] + 4.0 * v[e - 2] - v[e - 3]) / h2;
    const double d1 = (3.0 * v[e] - 4.0 * v[e - 1] + v[e - 2]) / (2.0 * h);
    out.values[e] = d2 + c / rho * d1;
    return out;
}

namespace {

// Worst deviation between samples on the same lattice shell, relative to the peak.
template <Domain D>
double shell_deviation(const Field<D>& field) {
    const GridSpec& g = field.grid();
    const double peak = field.max_norm0();
    if (peak == 0.0) return 0.0;
    std::vector<double> coord(static_cast<std::size_t>(g.n()));
    double unit = 0.0;
    for (int j = 0; j < g.n(); ++j) {
        const double step = D == Domain::Space ? g.spacing()[j] : g.frequency_step(j);
        unit = std::max(unit, step * step);
    }
    std::map<long long, Multivector> shells;
    double worst = 0.0;
    for (std::size_t q = 0; q < g.point_count(); ++q) {
        if constexpr (D == Domain::Space) {
            g.coordinates(q, coord);
        } else {
            g.frequencies(q, coord);
        }
        double r2 = 0.0;
        for (double c : coord) r2 += c * c;
        const long long key = std::llround(r2 / unit * 1e6);
        const Multivector value = field.at(q);
        auto it = shells.find(key);
        if (it == shells.end()) {
            shells.emplace(key, value);
        } else {
            worst = std::max(worst, mv_norm0(value - it->second));
        }
    }
    return worst / peak;
}

}  // namespace

double radial_asymmetry(const CliffordField& psi) {
    // Sampling a radial function in space keeps the space samples radial; building
    // it from a radial spectrum keeps the frequency samples radial but periodizes
    // the space samples. Either representation qualifies.
    const double space = shell_deviation(psi);
    if (space == 0.0) return 0.0;
    return std::min(space, shell_deviation(dft_forward(psi)));
}

RadialPwReport radial_pw_bound(const CliffordField& psi, double alpha, int m, int k_max, std::optional<double> radius) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("radial_pw_bound: requires 0 < alpha <= 1");
    if (m < 0 || k_max < 0) throw std::invalid_argument("radial_pw_bound: m and k_max must be >= 0");
    const double asym = radial_asymmetry(psi);
    if (asym > kRadialTolerance) {
        throw std::invalid_argument("radial_pw_bound: field is not radially symmetric (relative deviation " +
                                    std::to_string(asym) + ")");
    }
    const auto psi_hat = numerical_support(dft_forward(psi));
    const double r = radius ? *radius : support_radius(psi_hat);
    const GridSpec& g = psi.grid();
    const int n = g.n();
    const FellerParams riesz(alpha, 0.0);

    std::vector<double> weight(g.point_count());
    std::vector<double> x(static_cast<std::size_t>(n));
    for (std::size_t q = 0; q < g.point_count(); ++q) {
        g.coordinates(q, x);
        double r2 = 0.0;
        for (double c : x) r2 += c * c;
        weight[q] = std::pow(1.0 + r2, m);
    }

    RadialPwReport report{alpha, m, r, {}, 0.0};
    for (int k = 0; k <= k_max; ++k) {
        const auto iterate = dft_inverse(riesz_feller_power(riesz, k, psi_hat));
        double sup = 0.0;
        for (std::size_t q = 0; q < g.point_count(); ++q) sup = std::max(sup, weight[q] * mv_norm0(iterate.at(q)));
        const double growth = k == 0 ? sup : std::pow(sup, 1.0 / k);
        report.entries.push_back({k, sup, growth, alpha * k > 2.0 * m + 1.0 - n});
        report.fitted_lambda = std::max(report.fitted_lambda, sup / std::pow(r, alpha * k));
    }
    return report;
}

}  // namespace rfl::pw
