#pragma once

// Band-limited test fields and the Paley-Wiener / Bernstein checks for the
// Riesz-Feller Dirac operator: Bernstein ratios, bandwidth recovery from
// operator powers, exponential-type profiles of Cauchy solutions, the
// Landau-Kolmogorov-Stein inequality and the duality pairing bound.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rfl/favard.hpp"
#include "rfl/kernels.hpp"
#include "rfl/operators.hpp"

namespace rfl::pw {

namespace modes {
/// Independent complex normal coefficients on every blade at each lattice
/// frequency with |xi| <= R; scaled to unit L^2 norm.
struct RandomBall {};
/// exp(i <x, xi_m>) e_0 at the lattice frequency with integer offsets m from
/// the DC bin; scaled to unit L^2 norm. Requires |xi_m| <= R.
struct PlaneWave { std::vector<int> offsets; };
struct UrysohnBump { double epsilon; };
struct BesselRadial {};
}  // namespace modes

using BandlimitMode = std::variant<modes::RandomBall, modes::PlaneWave, modes::UrysohnBump, modes::BesselRadial>;

struct BandlimitSpec {
    double radius = 1.0;
    std::uint64_t seed = 0;
    BandlimitMode mode = modes::RandomBall{};
};

/// Throws std::invalid_argument if the spectral radius exceeds the grid's Nyquist radius.
CliffordField make_bandlimited(const GridSpec& grid, const BandlimitSpec& spec);

/// Radial Urysohn profile: 1 on [0, R], exp(1 - 1/(1 - s^2)) with
/// s = (r - R)/eps on (R, R + eps), 0 beyond.
double urysohn_profile(double r, double radius, double epsilon);

/// Scalar field whose spectrum is urysohn_profile(|xi|) e_0. Real-valued.
CliffordField make_urysohn_bump(const GridSpec& grid, double radius, double epsilon);

/// Samples (R|x|)^{-n/2} J_{n/2}(R|x|) e_0, with the limit 2^{-n/2}/Gamma(n/2+1) at x = 0.
CliffordField make_bessel_radial(const GridSpec& grid, double radius);

/// Relative threshold defining the numerical support of a spectrum.
inline constexpr double kSupportTolerance = 1e-12;

/// Zeroes every frequency sample with |F(xi)|_0 <= tol * max |F|_0.
SpectralField numerical_support(const SpectralField& spectrum, double tol = kSupportTolerance);

/// R(f_hat): max |xi| over the numerical support. Throws std::invalid_argument for f = 0.
double support_radius(const SpectralField& spectrum, double tol = kSupportTolerance);
double support_radius(const CliffordField& f, double tol = kSupportTolerance);

/// Resamples a lattice trigonometric polynomial onto a grid with `factor`
/// times the samples and 1/factor the spacing (same frequency step).
CliffordField refine(const CliffordField& f, int factor);

struct RatioEntry {
    int k;
    double value;
};

struct RatioSequence {
    double p;
    FellerParams params;
    std::vector<RatioEntry> entries;
    double fitted_constant = 0.0;  // max entry
    double limit = 0.0;            // last entry
};

struct BernsteinResult {
    double radius;         // radius used in the denominator
    double oracle_radius;  // R(f_hat)
    RatioSequence plus;    // f_+
    RatioSequence minus;   // f_-
};

/// ||(D_theta^alpha)^k f_+/-||_p / (R^{alpha k} ||f_+/-||_p) for k = 0..k_max,
/// with R the oracle radius unless `radius` overrides it.
BernsteinResult bernstein_ratios(const CliffordField& f, const FellerParams& params, double p, int k_max,
                                 std::optional<double> radius = std::nullopt);

struct BandwidthResult {
    RatioSequence sequence;  // a_k for k = 1..k_max
    double estimate;         // a_{k_max}
    double oracle_radius;
    double frequency_step;   // largest lattice step
};

/// a_k = ||(D_theta^alpha)^k f||_p^{1/(alpha k)}.
BandwidthResult bandwidth_estimate(const CliffordField& f, const FellerParams& params, double p, int k_max);

/// How u(., x0) is produced from f. Cauchy: the decaying Hardy branch from
/// solve_cauchy. Entire: the full multiplier exp(-x0 |xi|^alpha h_theta(xi))
/// on all of f, finite for band-limited f and of exponential type R^alpha.
enum class Extension { Cauchy, Entire };

/// exp(-x0 D_theta^alpha) f with both Hardy components kept, for any real x0.
CliffordField evolve_entire(const CliffordField& f, double x0, const FellerParams& params);

struct ExpTypeRow {
    double x0;
    double value;  // e^{-|x0| R^alpha} ||u(., x0)||_p
};

struct ExpTypeProfile {
    std::vector<ExpTypeRow> rows;
    double radius;
    double boundary_norm;  // ||f||_p
    double fitted_constant;  // max value / ||f||_p
};

ExpTypeProfile exp_type_profile(const CliffordField& f, const FellerParams& params, double p,
                                std::span<const double> x0_list, std::optional<double> radius = std::nullopt,
                                Extension extension = Extension::Cauchy);

struct PointwiseExpType {
    double value;  // sup e^{-|(x0, x)| R^alpha} |u(x, x0)|_0
    double argmax_x0;
};

PointwiseExpType pointwise_exp_type(const CliffordField& f, const FellerParams& params,
                                    std::span<const double> x0_list, std::optional<double> radius = std::nullopt,
                                    Extension extension = Extension::Cauchy);

struct LksResult {
    double lhs;
    double rhs;
    double constant;  // C_{k,l} = K_{l-k}^l / K_l^{l-k}
    bool pass;
};

/// ||D^k f||^l <= C_{k,l} ||f||^{l-k} ||D^l f||^k with D = D_theta^alpha.
LksResult lks_check(const CliffordField& f, const FellerParams& params, double p, int k, int l);

struct PairingResult {
    double pairing;  // |<u(., x0), g>_0|
    double bound;    // C 2^n e^{|x0| R^alpha} ||f||_p ||g||_q
    bool pass;
};

PairingResult pairing_bound(const CliffordField& f, const CliffordField& g, const FellerParams& params, double p,
                            double x0, double constant, std::optional<double> radius = std::nullopt);

}  // namespace rfl::pw
