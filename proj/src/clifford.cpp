#include "rfl/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rfl {

namespace {

void require_same(const AlgebraSignature& a, const AlgebraSignature& b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": signature mismatch (n=" +
                                    std::to_string(a.n()) + " vs n=" + std::to_string(b.n()) + ")");
    }
}

}  // namespace

AlgebraSignature::AlgebraSignature(int n) : n_(n) {
    if (n < 1 || n > kMaxGenerators) {
        throw std::invalid_argument("AlgebraSignature: generator count must lie in [1, 12], got " +
                                    std::to_string(n));
    }
}

Multivector::Multivector(AlgebraSignature sig) : sig_(sig), coeffs_(sig.blade_count()) {}

Multivector::Multivector(AlgebraSignature sig, std::vector<Complex> coeffs)
    : sig_(sig), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.blade_count()) {
        throw std::invalid_argument("Multivector: expected " + std::to_string(sig_.blade_count()) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
    }
}

Multivector Multivector::scalar(AlgebraSignature sig, Complex value) {
    Multivector v(sig);
    v.coeffs_[0] = value;
    return v;
}

Multivector Multivector::blade(AlgebraSignature sig, BladeIndex index, Complex value) {
    if (index >= sig.blade_count()) {
        throw std::invalid_argument("Multivector::blade: index out of range");
    }
    Multivector v(sig);
    v.coeffs_[index] = value;
    return v;
}

Multivector Multivector::generator(AlgebraSignature sig, int j) {
    if (j < 1 || j > sig.n()) {
        throw std::invalid_argument("Multivector::generator: j must lie in [1, n]");
    }
    return blade(sig, generator_blade(j));
}

Multivector Multivector::vector(AlgebraSignature sig, std::span<const double> v) {
    if (static_cast<int>(v.size()) > sig.n()) {
        throw std::invalid_argument("Multivector::vector: more components than generators");
    }
    Multivector out(sig);
    for (std::size_t j = 0; j < v.size(); ++j) {
        out.coeffs_[generator_blade(static_cast<int>(j) + 1)] = v[j];
    }
    return out;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
    require_same(sig_, rhs.sig_, "Multivector +");
    for (std::size_t a = 0; a < coeffs_.size(); ++a) coeffs_[a] += rhs.coeffs_[a];
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
    require_same(sig_, rhs.sig_, "Multivector -");
    for (std::size_t a = 0; a < coeffs_.size(); ++a) coeffs_[a] -= rhs.coeffs_[a];
    return *this;
}

Multivector& Multivector::operator*=(Complex s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Multivector operator*(const Multivector& lhs, const Multivector& rhs) {
    require_same(lhs.sig_, rhs.sig_, "mv_multiply");
    Multivector out(lhs.sig_);
    const auto blades = static_cast<BladeIndex>(lhs.coeffs_.size());
    for (BladeIndex a = 0; a < blades; ++a) {
        const Complex la = lhs.coeffs_[a];
        if (la == Complex{}) continue;
        for (BladeIndex b = 0; b < blades; ++b) {
            const Complex mb = rhs.coeffs_[b];
            if (mb == Complex{}) continue;
            const auto [sign, c] = blade_product(a, b);
            out.coeffs_[c] += static_cast<double>(sign) * la * mb;
        }
    }
    return out;
}

Multivector mv_multiply(const Multivector& lhs, const Multivector& rhs) { return lhs * rhs; }

Multivector mv_dagger(const Multivector& v) {
    Multivector out(v.signature());
    for (BladeIndex a = 0; a < v.size(); ++a) {
        out[a] = static_cast<double>(conjugation_sign(a)) * std::conj(v[a]);
    }
    return out;
}

double mv_norm0(const Multivector& v) {
    double sum = 0.0;
    for (const auto& c : v.coeffs()) sum += std::norm(c);
    return std::sqrt(std::ldexp(sum, v.signature().n()));
}

Complex mv_inner(const Multivector& lhs, const Multivector& rhs) {
    require_same(lhs.signature(), rhs.signature(), "mv_inner");
    Complex sum{};
    for (BladeIndex a = 0; a < lhs.size(); ++a) sum += lhs[a] * std::conj(rhs[a]);
    return std::ldexp(1.0, lhs.signature().n()) * sum;
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
    require_same(a.signature(), b.signature(), "max_abs_diff");
    double m = 0.0;
    for (BladeIndex i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

std::ostream& operator<<(std::ostream& os, const Multivector& v) {
    bool first = true;
    for (BladeIndex a = 0; a < v.size(); ++a) {
        if (v[a] == Complex{}) continue;
        if (!first) os << " + ";
        first = false;
        os << v[a] << "*e";
        if (a == 0) {
            os << '0';
        } else {
            for (int j = 0; j < v.signature().n(); ++j) {
                if (a & (BladeIndex{1} << j)) os << (j + 1);
            }
        }
    }
    if (first) os << '0';
    return os;
}

}  // namespace rfl
