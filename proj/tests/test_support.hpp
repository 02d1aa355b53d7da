#pragma once

// Shared generators and comparison helpers for the unit and acceptance suites.

#include <cmath>
#include <cstdint>
#include <random>

#include "rfl/grid.hpp"

namespace rfl::testing {

inline Multivector random_multivector(AlgebraSignature sig, std::mt19937_64& rng, bool real_only = false) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Multivector v(sig);
    for (auto& c : v.coeffs()) c = Complex(normal(rng), real_only ? 0.0 : normal(rng));
    return v;
}

/// White-noise field: independent normals on every sample and blade.
inline CliffordField random_field(const GridSpec& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const AlgebraSignature sig(grid.n());
    CliffordField f(grid, sig);
    for (std::size_t q = 0; q < f.point_count(); ++q) f.set(q, random_multivector(sig, rng));
    return f;
}

/// Same noise with the DC bin of every blade removed.
inline CliffordField random_zero_mean_field(const GridSpec& grid, std::uint64_t seed) {
    auto spectrum = dft_forward(random_field(grid, seed));
    std::vector<int> centre(grid.n());
    for (int j = 0; j < grid.n(); ++j) centre[j] = grid.sizes()[j] / 2;
    spectrum.set(grid.linear_index(centre), Multivector(spectrum.signature()));
    return dft_inverse(spectrum);
}

/// max |a - b|_0 / max |b|_0 over the lattice.
template <Domain D>
double relative_max_error(const Field<D>& a, const Field<D>& b) {
    const double ref = b.max_norm0();
    auto diff = a;
    diff -= b;
    return ref == 0.0 ? diff.max_norm0() : diff.max_norm0() / ref;
}

}  // namespace rfl::testing
