#pragma once

// Fourier symbols of the Riesz-Feller Dirac calculus and their application
// to Clifford fields. All symbols multiply the spectrum from the left.

#include <optional>
#include <span>
#include <variant>

#include "rfl/grid.hpp"

namespace rfl {

/// Order alpha in (0, 1] and skewness theta (any real).
class FellerParams {
public:
    /// Throws std::invalid_argument unless 0 < alpha <= 1 and theta is finite.
    FellerParams(double alpha, double theta);

    double alpha() const noexcept { return alpha_; }
    double theta() const noexcept { return theta_; }
    /// |1 - theta| < alpha / 2: the lower half-space solution decays.
    bool cauchy_admissible() const noexcept;

private:
    double alpha_;
    double theta_;
};

namespace symbols {

struct Dirac {};                               // -i xi
struct RieszDerivative { double alpha; };      // |xi|^alpha
struct RieszHilbert {};                        // -i xi / |xi|
struct DirectionalRiesz { int axis; };         // -i xi_j / |xi|, axis in [1, n]
struct ChiPlus {};                             // (1 + i xi/|xi|) / 2
struct ChiMinus {};                            // (1 - i xi/|xi|) / 2
struct HTheta { double theta; };
struct RieszFeller { double alpha; double theta; };
struct RieszFellerPower { double alpha; double theta; int k; };
/// exp(-t e^{i pi gamma / 2} |xi|^alpha)
struct SemigroupFactor { double alpha; double t; double gamma; };
/// One branch of exp(-x0 |xi|^alpha h_theta(xi)): x0 > 0 keeps the chi_- part,
/// x0 < 0 keeps the chi_+ part, x0 = 0 is the identity.
struct CauchyEvolution { double alpha; double theta; double x0; };

}  // namespace symbols

using SymbolKind =
    std::variant<symbols::Dirac, symbols::RieszDerivative, symbols::RieszHilbert,
                 symbols::DirectionalRiesz, symbols::ChiPlus, symbols::ChiMinus, symbols::HTheta,
                 symbols::RieszFeller, symbols::RieszFellerPower, symbols::SemigroupFactor,
                 symbols::CauchyEvolution>;

/// Value used at xi = 0 when the caller does not supply one.
Multivector default_dc_value(const SymbolKind& kind, AlgebraSignature sig);

/// Multivector value of the symbol at xi. At xi = 0 the dc_policy (or the
/// default DC value) is returned.
Multivector eval_symbol(const SymbolKind& kind, std::span<const double> xi, AlgebraSignature sig,
                        const std::optional<Multivector>& dc_policy = std::nullopt);

/// Symbol closure suitable for apply_symbol / apply_multiplier.
Symbol make_symbol(const SymbolKind& kind, AlgebraSignature sig,
                   const std::optional<Multivector>& dc_policy = std::nullopt);

CliffordField apply_operator(const SymbolKind& kind, const CliffordField& f,
                             const std::optional<Multivector>& dc_policy = std::nullopt);
SpectralField apply_operator(const SymbolKind& kind, const SpectralField& spectrum,
                             const std::optional<Multivector>& dc_policy = std::nullopt);

enum class HardySign { Plus, Minus };

/// f_+ = (f + Hf)/2 (symbol chi_-), f_- = (f - Hf)/2 (symbol chi_+); DC split in halves.
CliffordField hardy_project(HardySign sign, const CliffordField& f);
SpectralField hardy_project(HardySign sign, const SpectralField& spectrum);

/// (D_theta^alpha)^k in one pass: |xi|^{alpha k} (chi_- + e^{-i pi theta k} chi_+).
CliffordField riesz_feller_power(const FellerParams& params, int k, const CliffordField& f);
SpectralField riesz_feller_power(const FellerParams& params, int k, const SpectralField& spectrum);

/// Riesz kernel Gamma((n+1)/2) / pi^{(n+1)/2} * x_j / |x|^{n+1}, n = x.size(),
/// axis in [1, n]. Throws std::domain_error at x = 0.
double riesz_kernel_eval(int axis, std::span<const double> x);

}  // namespace rfl
