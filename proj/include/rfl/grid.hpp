#pragma once

// Periodic sampling lattices and Clifford-valued fields on them.
//
// Both the spatial lattice and its dual are origin-centered: along an axis
// with N samples and step h, x_k = (k - N/2) h and xi_m = (m - N/2) dxi with
// dxi = 2 pi / (N h), for k, m in [0, N). The Nyquist bin sits at m = 0 only.

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "rfl/clifford.hpp"

namespace rfl {

class GridSpec {
public:
    /// Throws std::invalid_argument unless every N_j >= 4 is even and every h_j > 0.
    GridSpec(std::vector<int> sizes, std::vector<double> spacing);

    static GridSpec uniform(int n, int samples, double spacing);

    int n() const noexcept { return static_cast<int>(sizes_.size()); }
    const std::vector<int>& sizes() const noexcept { return sizes_; }
    const std::vector<double>& spacing() const noexcept { return spacing_; }

    std::size_t point_count() const noexcept { return points_; }
    /// prod_j h_j
    double cell_volume() const noexcept;
    /// prod_j dxi_j
    double frequency_cell_volume() const noexcept;
    double frequency_step(int axis) const { return kTwoPi / (sizes_[axis] * spacing_[axis]); }
    /// Largest dxi_j; the resolution limit for support radii.
    double max_frequency_step() const noexcept;
    /// min_j pi / h_j: radius of the largest ball inside the frequency box.
    double nyquist_radius() const noexcept;
    /// Per-axis physical length N_j h_j.
    double extent(int axis) const { return sizes_[axis] * spacing_[axis]; }

    void multi_index(std::size_t linear, std::span<int> out) const;
    std::size_t linear_index(std::span<const int> index) const;

    void coordinates(std::size_t linear, std::span<double> x) const;
    void frequencies(std::size_t linear, std::span<double> xi) const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

    static constexpr double kTwoPi = 6.283185307179586476925286766559;

private:
    std::vector<int> sizes_;
    std::vector<double> spacing_;
    std::size_t points_ = 0;
};

enum class Domain { Space, Frequency };

/// Clifford-valued samples on a lattice, stored blade-major: all samples of
/// blade 0, then blade 1, and so on. Point order is row-major (last axis fastest).
template <Domain D>
class Field {
public:
    Field(GridSpec grid, AlgebraSignature sig);

    static Field from_function(const GridSpec& grid, AlgebraSignature sig,
                               const std::function<Multivector(std::span<const double>)>& fn);

    const GridSpec& grid() const noexcept { return grid_; }
    const AlgebraSignature& signature() const noexcept { return sig_; }
    std::size_t point_count() const noexcept { return grid_.point_count(); }
    std::size_t blade_count() const noexcept { return sig_.blade_count(); }

    Multivector at(std::size_t point) const;
    void set(std::size_t point, const Multivector& value);

    std::span<Complex> component(BladeIndex blade) {
        return {data_.data() + blade * point_count(), point_count()};
    }
    std::span<const Complex> component(BladeIndex blade) const {
        return {data_.data() + blade * point_count(), point_count()};
    }
    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> data() const noexcept { return data_; }

    Field& operator+=(const Field& rhs);
    Field& operator-=(const Field& rhs);
    Field& operator*=(Complex s);
    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(Complex s, Field a) { return a *= s; }

    /// max over points of |value|_0
    double max_norm0() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    GridSpec grid_;
    AlgebraSignature sig_;
    std::vector<Complex> data_;
};

using CliffordField = Field<Domain::Space>;
using SpectralField = Field<Domain::Frequency>;

extern template class Field<Domain::Space>;
extern template class Field<Domain::Frequency>;

/// Frequency-dependent multivector symbol xi -> m(xi).
using Symbol = std::function<Multivector(std::span<const double>)>;

/// f_hat(xi_m) = prod h_j sum_k f(x_k) exp(-i <x_k, xi_m>), per blade component.
SpectralField dft_forward(const CliffordField& f);

/// Exact inverse of dft_forward: (2 pi)^{-n} sum_m F(xi_m) exp(i <x, xi_m>) prod dxi_j.
CliffordField dft_inverse(const SpectralField& spectrum);

/// Left Clifford multiplication of every frequency sample by symbol(xi).
/// Symbol failures are rethrown as std::invalid_argument naming the frequency.
SpectralField apply_symbol(const Symbol& symbol, const SpectralField& spectrum);

/// F^{-1}[ m(xi) F f ].
CliffordField apply_multiplier(const Symbol& symbol, const CliffordField& f);

/// lambda * f(x) at every point.
CliffordField left_multiply(const Multivector& lambda, const CliffordField& f);

inline constexpr double kInfinityNorm = std::numeric_limits<double>::infinity();

/// Riemann-sum L^p norm of |f|_0; p = kInfinityNorm gives the lattice max.
/// Throws std::invalid_argument for p < 1.
double lp_norm(const CliffordField& f, double p);

/// (sum_m |F(xi_m)|_0^2 prod dxi_j)^{1/2}; Plancherel reads ||f||_2^2 = (2 pi)^{-n} ||F||^2.
double spectral_l2_norm(const SpectralField& spectrum);

/// <f, g>_0 = 2^n sum_x [f(x)^dagger g(x)]_0 prod h_j.
Complex field_pairing(const CliffordField& f, const CliffordField& g);

}  // namespace rfl
