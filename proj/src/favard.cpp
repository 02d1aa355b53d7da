#include "rfl/favard.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rfl::pw {

namespace {

constexpr int kAveragingLevels = 24;

double term(int r, int exponent) { return std::pow(2.0 * r + 1.0, -exponent); }

}  // namespace

FavardTable favard_constant(int j, int terms) {
    if (j < 0) throw std::invalid_argument("favard_constant: j must be >= 0");
    if (terms < 1) throw std::invalid_argument("favard_constant: terms must be >= 1");
    const int s = j + 1;
    const double scale = 4.0 / M_PI;

    if (s % 2 == 1) {
        // Alternating: average consecutive partial sums level by level.
        std::vector<double> partial;
        partial.reserve(kAveragingLevels + 1);
        double sum = 0.0;
        for (int r = 0; r < terms + kAveragingLevels; ++r) {
            sum += ((r & 1) ? -1.0 : 1.0) * term(r, s);
            if (r >= terms - 1) partial.push_back(sum);
        }
        while (partial.size() > 2) {
            for (std::size_t i = 0; i + 1 < partial.size(); ++i) partial[i] = 0.5 * (partial[i] + partial[i + 1]);
            partial.pop_back();
        }
        const double value = 0.5 * (partial[0] + partial[1]);
        return {j, scale * value, terms, scale * std::abs(partial[0] - partial[1])};
    }

    // Positive terms: f(r) = (2r+1)^{-s} is convex and decreasing, so the tail
    // sum over r >= T lies in [int_T^inf f + f(T)/2, int_{T-1/2}^inf f].
    double sum = 0.0;
    for (int r = 0; r < terms; ++r) sum += term(r, s);
    const double t = terms;
    const auto tail_integral = [s](double from) { return std::pow(2.0 * from + 1.0, 1.0 - s) / (2.0 * (s - 1)); };
    const double lower = tail_integral(t) + 0.5 * term(terms, s);
    const double upper = tail_integral(t - 0.5);
    return {j, scale * (sum + 0.5 * (lower + upper)), terms, scale * 0.5 * (upper - lower)};
}

double lks_constant(int k, int l) {
    if (k < 0 || k > l) throw std::invalid_argument("lks_constant: requires 0 <= k <= l");
    return std::pow(favard_constant(l - k).value, l) / std::pow(favard_constant(l).value, l - k);
}

}  // namespace rfl::pw
