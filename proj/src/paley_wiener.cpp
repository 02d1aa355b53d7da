#include "rfl/paley_wiener.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace rfl::pw {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double norm_of(std::span<const double> v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

void require_radius(const GridSpec& grid, double radius, const char* what) {
    if (!(radius > 0.0)) throw std::invalid_argument(std::string(what) + ": radius must be > 0");
    if (radius > grid.nyquist_radius()) {
        throw std::invalid_argument(std::string(what) + ": radius " + std::to_string(radius) +
                                    " exceeds the Nyquist radius " + std::to_string(grid.nyquist_radius()));
    }
}

void require_nonzero(const CliffordField& f, const char* what) {
    if (f.max_norm0() == 0.0) throw std::invalid_argument(std::string(what) + ": field is identically zero");
}

CliffordField normalized(const SpectralField& spectrum) {
    // ||f||_2 = (2 pi)^{-n/2} ||f_hat||
    const double norm = spectral_l2_norm(spectrum) / std::pow(GridSpec::kTwoPi, spectrum.grid().n() / 2.0);
    SpectralField scaled = spectrum;
    scaled *= 1.0 / norm;
    return dft_inverse(scaled);
}

double conjugate_exponent(double p) {
    if (std::isinf(p)) return 1.0;
    if (p == 1.0) return kInfinityNorm;
    return p / (p - 1.0);
}

double weight_radius(std::optional<double> radius, const CliffordField& f) {
    return radius ? *radius : support_radius(f);
}

}  // namespace

double urysohn_profile(double r, double radius, double epsilon) {
    if (r <= radius) return 1.0;
    if (r >= radius + epsilon) return 0.0;
    const double s = (r - radius) / epsilon;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

CliffordField make_urysohn_bump(const GridSpec& grid, double radius, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("make_urysohn_bump: epsilon must be > 0");
    require_radius(grid, radius + epsilon, "make_urysohn_bump");
    const AlgebraSignature sig(grid.n());
    const auto spectrum = SpectralField::from_function(grid, sig, [&](std::span<const double> xi) {
        return Multivector::scalar(sig, urysohn_profile(norm_of(xi), radius, epsilon));
    });
    auto field = dft_inverse(spectrum);
    for (auto& c : field.component(0)) c = c.real();
    return field;
}

CliffordField make_bessel_radial(const GridSpec& grid, double radius) {
    require_radius(grid, radius, "make_bessel_radial");
    const int n = grid.n();
    const AlgebraSignature sig(n);
    const double nu = n / 2.0;
    const double at_origin = std::pow(2.0, -nu) / std::tgamma(nu + 1.0);
    return CliffordField::from_function(grid, sig, [&](std::span<const double> x) {
        const double z = radius * norm_of(x);
        const double v = z == 0.0 ? at_origin : std::cyl_bessel_j(nu, z) / std::pow(z, nu);
        return Multivector::scalar(sig, v);
    });
}

CliffordField make_bandlimited(const GridSpec& grid, const BandlimitSpec& spec) {
    const AlgebraSignature sig(grid.n());
    return std::visit(
        Overloaded{
            [&](const modes::RandomBall&) {
                require_radius(grid, spec.radius, "make_bandlimited");
                std::mt19937_64 rng(spec.seed);
                std::normal_distribution<double> normal(0.0, 1.0);
                SpectralField spectrum(grid, sig);
                std::vector<double> xi(static_cast<std::size_t>(grid.n()));
                // Draw blade-major, point-minor so the stream order is fixed.
                for (BladeIndex a = 0; a < sig.blade_count(); ++a) {
                    auto comp = spectrum.component(a);
                    for (std::size_t q = 0; q < grid.point_count(); ++q) {
                        grid.frequencies(q, xi);
                        const double re = normal(rng);
                        const double im = normal(rng);
                        if (norm_of(xi) <= spec.radius) comp[q] = Complex(re, im);
                    }
                }
                return normalized(spectrum);
            },
            [&](const modes::PlaneWave& wave) {
                require_radius(grid, spec.radius, "make_bandlimited");
                if (static_cast<int>(wave.offsets.size()) != grid.n()) {
                    throw std::invalid_argument("make_bandlimited: plane wave needs one offset per axis");
                }
                std::vector<int> index(static_cast<std::size_t>(grid.n()));
                std::vector<double> xi(index.size());
                for (int j = 0; j < grid.n(); ++j) {
                    index[j] = wave.offsets[j] + grid.sizes()[j] / 2;
                    if (index[j] < 0 || index[j] >= grid.sizes()[j]) {
                        throw std::invalid_argument("make_bandlimited: plane-wave offset outside the lattice");
                    }
                    xi[j] = wave.offsets[j] * grid.frequency_step(j);
                }
                if (norm_of(xi) > spec.radius * (1.0 + 1e-12)) {
                    throw std::invalid_argument("make_bandlimited: plane-wave frequency lies outside B(0, R)");
                }
                SpectralField spectrum(grid, sig);
                spectrum.component(0)[grid.linear_index(index)] = 1.0;
                return normalized(spectrum);
            },
            [&](const modes::UrysohnBump& bump) { return make_urysohn_bump(grid, spec.radius, bump.epsilon); },
            [&](const modes::BesselRadial&) { return make_bessel_radial(grid, spec.radius); },
        },
        spec.mode);
}

SpectralField numerical_support(const SpectralField& spectrum, double tol) {
    const std::size_t points = spectrum.point_count();
    std::vector<double> mag(points);
    for (std::size_t q = 0; q < points; ++q) {
        double s = 0.0;
        for (std::size_t a = 0; a < spectrum.blade_count(); ++a) s += std::norm(spectrum.data()[a * points + q]);
        mag[q] = std::sqrt(s);
    }
    const double peak = points ? *std::max_element(mag.begin(), mag.end()) : 0.0;
    SpectralField out = spectrum;
    for (std::size_t q = 0; q < points; ++q) {
        if (mag[q] <= tol * peak) {
            for (std::size_t a = 0; a < spectrum.blade_count(); ++a) out.data()[a * points + q] = 0.0;
        }
    }
    return out;
}

double support_radius(const SpectralField& spectrum, double tol) {
    const auto clean = numerical_support(spectrum, tol);
    const GridSpec& g = spectrum.grid();
    std::vector<double> xi(static_cast<std::size_t>(g.n()));
    double radius = -1.0;
    for (std::size_t q = 0; q < g.point_count(); ++q) {
        bool nonzero = false;
        for (std::size_t a = 0; a < clean.blade_count() && !nonzero; ++a) {
            nonzero = clean.data()[a * g.point_count() + q] != Complex{};
        }
        if (!nonzero) continue;
        g.frequencies(q, xi);
        radius = std::max(radius, norm_of(xi));
    }
    if (radius < 0.0) throw std::invalid_argument("support_radius: spectrum is empty (f = 0)");
    return radius;
}

double support_radius(const CliffordField& f, double tol) { return support_radius(dft_forward(f), tol); }

CliffordField refine(const CliffordField& f, int factor) {
    if (factor < 1) throw std::invalid_argument("refine: factor must be >= 1");
    const GridSpec& g = f.grid();
    std::vector<int> sizes(g.sizes());
    std::vector<double> spacing(g.spacing());
    for (int j = 0; j < g.n(); ++j) {
        sizes[j] *= factor;
        spacing[j] /= factor;
    }
    const GridSpec fine(sizes, spacing);
    const auto coarse_hat = dft_forward(f);
    SpectralField fine_hat(fine, f.signature());
    std::vector<int> idx(static_cast<std::size_t>(g.n()));
    for (std::size_t q = 0; q < g.point_count(); ++q) {
        g.multi_index(q, idx);
        for (int j = 0; j < g.n(); ++j) idx[j] += (sizes[j] - g.sizes()[j]) / 2;
        fine_hat.set(fine.linear_index(idx), coarse_hat.at(q));
    }
    return dft_inverse(fine_hat);
}

// ---------------------------------------------------------------------------

namespace {

// ||(D_theta^alpha)^k g||_p from a cleaned spectrum of g.
double power_norm(const SpectralField& g_hat, const FellerParams& params, int k, double p) {
    return lp_norm(dft_inverse(riesz_feller_power(params, k, g_hat)), p);
}

RatioSequence ratio_sequence(const SpectralField& part_hat, const FellerParams& params, double p, int k_max,
                             double radius) {
    RatioSequence seq{p, params, {}, 0.0, 0.0};
    const double base = lp_norm(dft_inverse(part_hat), p);
    for (int k = 0; k <= k_max; ++k) {
        double value = 0.0;
        if (base > 0.0) {
            // Scale by R^{-alpha k} through the log to stay finite for large k.
            const double num = power_norm(part_hat, params, k, p);
            value = num == 0.0 ? 0.0 : std::exp(std::log(num) - params.alpha() * k * std::log(radius) - std::log(base));
        }
        seq.entries.push_back({k, value});
        seq.fitted_constant = std::max(seq.fitted_constant, value);
    }
    seq.limit = seq.entries.back().value;
    return seq;
}

}  // namespace

BernsteinResult bernstein_ratios(const CliffordField& f, const FellerParams& params, double p, int k_max,
                                 std::optional<double> radius) {
    require_nonzero(f, "bernstein_ratios");
    if (k_max < 1) throw std::invalid_argument("bernstein_ratios: k_max must be >= 1");
    const auto f_hat = numerical_support(dft_forward(f));
    const double oracle = support_radius(f_hat);
    const double r = radius ? *radius : oracle;
    if (!(r > 0.0)) throw std::invalid_argument("bernstein_ratios: radius must be > 0");
    return {r, oracle,
            ratio_sequence(hardy_project(HardySign::Plus, f_hat), params, p, k_max, r),
            ratio_sequence(hardy_project(HardySign::Minus, f_hat), params, p, k_max, r)};
}

BandwidthResult bandwidth_estimate(const CliffordField& f, const FellerParams& params, double p, int k_max) {
    require_nonzero(f, "bandwidth_estimate");
    if (k_max < 1) throw std::invalid_argument("bandwidth_estimate: k_max must be >= 1");
    const auto f_hat = numerical_support(dft_forward(f));
    RatioSequence seq{p, params, {}, 0.0, 0.0};
    for (int k = 1; k <= k_max; ++k) {
        const double norm = power_norm(f_hat, params, k, p);
        const double a = norm == 0.0 ? 0.0 : std::exp(std::log(norm) / (params.alpha() * k));
        seq.entries.push_back({k, a});
        seq.fitted_constant = std::max(seq.fitted_constant, a);
    }
    seq.limit = seq.entries.back().value;
    return {seq, seq.limit, support_radius(f_hat), f.grid().max_frequency_step()};
}

namespace {

SpectralField entire_spectrum(const SpectralField& f_hat, double x0, const FellerParams& params) {
    const AlgebraSignature sig = f_hat.signature();
    const Complex turn = std::polar(1.0, -M_PI * params.theta());
    const Symbol multiplier = [&](std::span<const double> xi) {
        const double r = norm_of(xi);
        if (r == 0.0) return Multivector::scalar(sig, 1.0);
        const double ra = std::pow(r, params.alpha());
        return eval_symbol(symbols::ChiMinus{}, xi, sig) * std::exp(-x0 * ra) +
               eval_symbol(symbols::ChiPlus{}, xi, sig) * std::exp(-x0 * turn * ra);
    };
    return apply_symbol(multiplier, f_hat);
}

// u(., x0) from the spectrum of f under the chosen extension.
CliffordField evolve(const SpectralField& f_hat, double x0, const FellerParams& params, Extension extension) {
    if (extension == Extension::Entire) return dft_inverse(entire_spectrum(numerical_support(f_hat), x0, params));
    return solve_cauchy_spectral(f_hat, x0, params);
}

}  // namespace

CliffordField evolve_entire(const CliffordField& f, double x0, const FellerParams& params) {
    if (x0 == 0.0) return f;
    return dft_inverse(entire_spectrum(numerical_support(dft_forward(f)), x0, params));
}

ExpTypeProfile exp_type_profile(const CliffordField& f, const FellerParams& params, double p,
                                std::span<const double> x0_list, std::optional<double> radius, Extension extension) {
    const double r = weight_radius(radius, f);
    const double rate = std::pow(r, params.alpha());
    const auto f_hat = dft_forward(f);
    ExpTypeProfile profile{{}, r, lp_norm(f, p), 0.0};
    double best = 0.0;
    for (double x0 : x0_list) {
        const double norm = x0 == 0.0 ? profile.boundary_norm : lp_norm(evolve(f_hat, x0, params, extension), p);
        const double value = std::exp(-std::abs(x0) * rate) * norm;
        profile.rows.push_back({x0, value});
        best = std::max(best, value);
    }
    profile.fitted_constant = profile.boundary_norm > 0.0 ? best / profile.boundary_norm : 0.0;
    return profile;
}

PointwiseExpType pointwise_exp_type(const CliffordField& f, const FellerParams& params,
                                    std::span<const double> x0_list, std::optional<double> radius,
                                    Extension extension) {
    if (f.max_norm0() == 0.0) return {0.0, 0.0};
    const double rate = std::pow(weight_radius(radius, f), params.alpha());
    const auto f_hat = dft_forward(f);
    const GridSpec& g = f.grid();
    std::vector<double> x(static_cast<std::size_t>(g.n()));
    PointwiseExpType best{0.0, 0.0};
    for (double x0 : x0_list) {
        const auto u = x0 == 0.0 ? f : evolve(f_hat, x0, params, extension);
        for (std::size_t q = 0; q < g.point_count(); ++q) {
            g.coordinates(q, x);
            double r2 = x0 * x0;
            for (double c : x) r2 += c * c;
            const double value = std::exp(-std::sqrt(r2) * rate) * mv_norm0(u.at(q));
            if (value > best.value) best = {value, x0};
        }
    }
    return best;
}

LksResult lks_check(const CliffordField& f, const FellerParams& params, double p, int k, int l) {
    if (k < 0 || k > l) throw std::invalid_argument("lks_check: requires 0 <= k <= l");
    require_nonzero(f, "lks_check");
    const auto f_hat = numerical_support(dft_forward(f));
    const double base = lp_norm(dft_inverse(f_hat), p);
    const double dk = power_norm(f_hat, params, k, p);
    const double dl = power_norm(f_hat, params, l, p);
    const double c = lks_constant(k, l);
    const double lhs = std::pow(dk, l);
    const double rhs = c * std::pow(base, l - k) * std::pow(dl, k);
    return {lhs, rhs, c, lhs <= rhs * (1.0 + 1e-8)};
}

PairingResult pairing_bound(const CliffordField& f, const CliffordField& g, const FellerParams& params, double p,
                            double x0, double constant, std::optional<double> radius) {
    if (f.grid() != g.grid()) throw std::invalid_argument("pairing_bound: f and g live on different grids");
    if (!(p >= 1.0)) throw std::invalid_argument("pairing_bound: p must be >= 1");
    const auto u = solve_cauchy(f, x0, params).field;
    const double pairing = std::abs(field_pairing(u, g));
    if (f.max_norm0() == 0.0 || g.max_norm0() == 0.0) return {pairing, 0.0, pairing == 0.0};
    const double rate = std::pow(weight_radius(radius, f), params.alpha());
    const double bound = constant * std::ldexp(1.0, f.grid().n()) * std::exp(std::abs(x0) * rate) * lp_norm(f, p) *
                         lp_norm(g, conjugate_exponent(p));
    return {pairing, bound, pairing <= bound * (1.0 + 1e-12)};
}

}  // namespace rfl::pw
