#pragma once

// Complexified Clifford algebra Cl(0,n): generators e_1..e_n with
// e_j e_k + e_k e_j = -2 delta_jk. Blades are addressed by the bitmask of
// their generator subset (bit j-1 <-> e_j), so e_0 is index 0.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace rfl {

using Complex = std::complex<double>;

class AlgebraSignature {
public:
    static constexpr int kMaxGenerators = 12;

    /// Throws std::invalid_argument unless 1 <= n <= kMaxGenerators.
    explicit AlgebraSignature(int n);

    int n() const noexcept { return n_; }
    std::size_t blade_count() const noexcept { return std::size_t{1} << n_; }

    friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;

private:
    int n_;
};

using BladeIndex = std::uint32_t;

struct BladeProduct {
    int sign;
    BladeIndex blade;
};

/// e_A e_B = sign * e_{A xor B}.
constexpr BladeProduct blade_product(BladeIndex a, BladeIndex b) noexcept {
    // Transpositions needed to sort the concatenated generator list.
    int swaps = 0;
    for (BladeIndex rest = a >> 1; rest != 0; rest >>= 1) {
        swaps += __builtin_popcount(rest & b);
    }
    // Each shared generator contracts with e_j^2 = -1.
    swaps += __builtin_popcount(a & b);
    return {(swaps & 1) ? -1 : 1, a ^ b};
}

constexpr int blade_grade(BladeIndex a) noexcept { return __builtin_popcount(a); }

/// Sign of the Clifford conjugate: conj(e_A) = (-1)^{r(r+1)/2} e_A, r = |A|.
constexpr int conjugation_sign(BladeIndex a) noexcept {
    const int r = blade_grade(a);
    return ((r * (r + 1) / 2) & 1) ? -1 : 1;
}

/// Generator e_j as a blade index, j in [1, n].
constexpr BladeIndex generator_blade(int j) noexcept { return BladeIndex{1} << (j - 1); }

class Multivector {
public:
    explicit Multivector(AlgebraSignature sig);
    Multivector(AlgebraSignature sig, std::vector<Complex> coeffs);

    static Multivector scalar(AlgebraSignature sig, Complex value);
    static Multivector blade(AlgebraSignature sig, BladeIndex index, Complex value = 1.0);
    /// e_j for j in [1, n].
    static Multivector generator(AlgebraSignature sig, int j);
    /// sum_j v_j e_j; v.size() must not exceed n.
    static Multivector vector(AlgebraSignature sig, std::span<const double> v);

    const AlgebraSignature& signature() const noexcept { return sig_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    Complex operator[](BladeIndex a) const { return coeffs_[a]; }
    Complex& operator[](BladeIndex a) { return coeffs_[a]; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    std::span<Complex> coeffs() noexcept { return coeffs_; }

    Complex scalar_part() const { return coeffs_[0]; }

    Multivector& operator+=(const Multivector& rhs);
    Multivector& operator-=(const Multivector& rhs);
    Multivector& operator*=(Complex s);

    friend Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
    friend Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }
    friend Multivector operator*(Multivector lhs, Complex s) { return lhs *= s; }
    friend Multivector operator*(Complex s, Multivector rhs) { return rhs *= s; }
    friend Multivector operator-(Multivector v) { return v *= -1.0; }

    /// Clifford product.
    friend Multivector operator*(const Multivector& lhs, const Multivector& rhs);

    friend bool operator==(const Multivector&, const Multivector&) = default;

private:
    AlgebraSignature sig_;
    std::vector<Complex> coeffs_;
};

Multivector mv_multiply(const Multivector& lhs, const Multivector& rhs);

/// Clifford conjugation of blades combined with complex conjugation of coefficients.
Multivector mv_dagger(const Multivector& v);

/// |v|_0 = 2^{n/2} (sum_A |v_A|^2)^{1/2}.
double mv_norm0(const Multivector& v);

/// (lhs, rhs)_0 = 2^n sum_A lhs_A conj(rhs_A).
Complex mv_inner(const Multivector& lhs, const Multivector& rhs);

/// Max coefficient distance; signatures must match.
double max_abs_diff(const Multivector& a, const Multivector& b);

std::ostream& operator<<(std::ostream& os, const Multivector& v);

}  // namespace rfl
