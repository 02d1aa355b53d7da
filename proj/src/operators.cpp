#include "rfl/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfl {

namespace {

constexpr Complex kI{0.0, 1.0};

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double euclidean_norm(std::span<const double> v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

// chi_-(xi) + phase * chi_+(xi), the spectral decomposition every Feller symbol shares.
Multivector projector_mix(std::span<const double> unit, AlgebraSignature sig, Complex minus_weight,
                          Complex plus_weight) {
    // chi_+/- = (1 +/- i u)/2 with u the unit vector.
    Multivector out = Multivector::scalar(sig, 0.5 * (minus_weight + plus_weight));
    const Complex vector_weight = 0.5 * kI * (plus_weight - minus_weight);
    for (std::size_t j = 0; j < unit.size(); ++j) {
        out[generator_blade(static_cast<int>(j) + 1)] = vector_weight * unit[j];
    }
    return out;
}

}  // namespace

FellerParams::FellerParams(double alpha, double theta) : alpha_(alpha), theta_(theta) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("FellerParams: order must satisfy 0 < alpha <= 1, got " +
                                    std::to_string(alpha));
    }
    if (!std::isfinite(theta)) throw std::invalid_argument("FellerParams: skewness must be finite");
}

bool FellerParams::cauchy_admissible() const noexcept { return std::abs(1.0 - theta_) < alpha_ / 2.0; }

Multivector default_dc_value(const SymbolKind& kind, AlgebraSignature sig) {
    const auto zero = Multivector(sig);
    const auto one = Multivector::scalar(sig, 1.0);
    const auto half = Multivector::scalar(sig, 0.5);
    return std::visit(
        Overloaded{
            [&](const symbols::Dirac&) { return zero; },
            [&](const symbols::RieszDerivative&) { return zero; },
            [&](const symbols::RieszHilbert&) { return zero; },
            [&](const symbols::DirectionalRiesz&) { return zero; },
            [&](const symbols::ChiPlus&) { return half; },
            [&](const symbols::ChiMinus&) { return half; },
            [&](const symbols::HTheta&) { return one; },
            [&](const symbols::RieszFeller&) { return zero; },
            [&](const symbols::RieszFellerPower& s) { return s.k == 0 ? one : zero; },
            [&](const symbols::SemigroupFactor&) { return one; },
            [&](const symbols::CauchyEvolution& s) { return s.x0 == 0.0 ? one : half; },
        },
        kind);
}

Multivector eval_symbol(const SymbolKind& kind, std::span<const double> xi, AlgebraSignature sig,
                        const std::optional<Multivector>& dc_policy) {
    if (static_cast<int>(xi.size()) != sig.n()) {
        throw std::invalid_argument("eval_symbol: frequency dimension does not match the algebra");
    }
    const double r = euclidean_norm(xi);
    if (r == 0.0) return dc_policy ? *dc_policy : default_dc_value(kind, sig);

    std::vector<double> unit(xi.begin(), xi.end());
    for (auto& u : unit) u /= r;

    return std::visit(
        Overloaded{
            [&](const symbols::Dirac&) { return Multivector::vector(sig, xi) * (-kI); },
            [&](const symbols::RieszDerivative& s) {
                return Multivector::scalar(sig, std::pow(r, s.alpha));
            },
            [&](const symbols::RieszHilbert&) { return Multivector::vector(sig, unit) * (-kI); },
            [&](const symbols::DirectionalRiesz& s) {
                if (s.axis < 1 || s.axis > sig.n()) {
                    throw std::invalid_argument("DirectionalRiesz: axis must lie in [1, n]");
                }
                return Multivector::scalar(sig, -kI * unit[s.axis - 1]);
            },
            [&](const symbols::ChiPlus&) { return projector_mix(unit, sig, 0.0, 1.0); },
            [&](const symbols::ChiMinus&) { return projector_mix(unit, sig, 1.0, 0.0); },
            [&](const symbols::HTheta& s) {
                // e^{-i pi theta/2} (cos(pi theta/2) + u sin(pi theta/2))
                const Complex phase = std::exp(-kI * (M_PI * s.theta / 2.0));
                Multivector out = Multivector::vector(sig, unit) * std::sin(M_PI * s.theta / 2.0);
                out[0] = std::cos(M_PI * s.theta / 2.0);
                return out * phase;
            },
            [&](const symbols::RieszFeller& s) {
                return eval_symbol(symbols::HTheta{s.theta}, xi, sig) * std::pow(r, s.alpha);
            },
            [&](const symbols::RieszFellerPower& s) {
                if (s.k < 0) throw std::invalid_argument("RieszFellerPower: k must be >= 0");
                if (s.k == 0) return Multivector::scalar(sig, 1.0);
                const double radial = std::pow(r, s.alpha * s.k);
                return projector_mix(unit, sig, radial,
                                     radial * std::exp(-kI * (M_PI * s.theta * s.k)));
            },
            [&](const symbols::SemigroupFactor& s) {
                const Complex z = s.t * std::exp(kI * (M_PI * s.gamma / 2.0));
                return Multivector::scalar(sig, std::exp(-z * std::pow(r, s.alpha)));
            },
            [&](const symbols::CauchyEvolution& s) {
                const double radial = std::pow(r, s.alpha);
                if (s.x0 > 0.0) {
                    return projector_mix(unit, sig, std::exp(-s.x0 * radial), 0.0);
                }
                if (s.x0 < 0.0) {
                    const Complex rate = std::exp(-kI * (M_PI * s.theta)) * radial;
                    return projector_mix(unit, sig, 0.0, std::exp(-s.x0 * rate));
                }
                return Multivector::scalar(sig, 1.0);
            },
        },
        kind);
}

Symbol make_symbol(const SymbolKind& kind, AlgebraSignature sig, const std::optional<Multivector>& dc_policy) {
    return [kind, sig, dc_policy](std::span<const double> xi) { return eval_symbol(kind, xi, sig, dc_policy); };
}

CliffordField apply_operator(const SymbolKind& kind, const CliffordField& f,
                             const std::optional<Multivector>& dc_policy) {
    return apply_multiplier(make_symbol(kind, f.signature(), dc_policy), f);
}

SpectralField apply_operator(const SymbolKind& kind, const SpectralField& spectrum,
                             const std::optional<Multivector>& dc_policy) {
    return apply_symbol(make_symbol(kind, spectrum.signature(), dc_policy), spectrum);
}

namespace {
SymbolKind hardy_symbol(HardySign sign) {
    if (sign == HardySign::Plus) return symbols::ChiMinus{};
    return symbols::ChiPlus{};
}
}  // namespace

CliffordField hardy_project(HardySign sign, const CliffordField& f) {
    return apply_operator(hardy_symbol(sign), f);
}

SpectralField hardy_project(HardySign sign, const SpectralField& spectrum) {
    return apply_operator(hardy_symbol(sign), spectrum);
}

CliffordField riesz_feller_power(const FellerParams& params, int k, const CliffordField& f) {
    if (k < 0) throw std::invalid_argument("riesz_feller_power: k must be >= 0");
    if (k == 0) return f;
    return apply_operator(symbols::RieszFellerPower{params.alpha(), params.theta(), k}, f);
}

SpectralField riesz_feller_power(const FellerParams& params, int k, const SpectralField& spectrum) {
    if (k < 0) throw std::invalid_argument("riesz_feller_power: k must be >= 0");
    if (k == 0) return spectrum;
    return apply_operator(symbols::RieszFellerPower{params.alpha(), params.theta(), k}, spectrum);
}

double riesz_kernel_eval(int axis, std::span<const double> x) {
    const int n = static_cast<int>(x.size());
    if (axis < 1 || axis > n) throw std::invalid_argument("riesz_kernel_eval: axis must lie in [1, n]");
    const double r = euclidean_norm(x);
    if (r == 0.0) throw std::domain_error("riesz_kernel_eval: kernel is singular at x = 0");
    const double c = std::tgamma((n + 1) / 2.0) / std::pow(M_PI, (n + 1) / 2.0);
    return c * x[axis - 1] / std::pow(r, n + 1);
}

}  // namespace rfl
