#pragma once

namespace rfl::pw {

/// K_j = (4/pi) sum_{r>=0} (-1)^{r(j+1)} / (2r+1)^{j+1}.
struct FavardTable {
    int j;
    double value;
    int terms;
    /// Even j: alternating series, value is the repeated average of the last
    /// partial sums and the bound is the spread of the final averaging level
    /// (the raw partial sum error is below the first omitted term).
    /// Odd j: positive series, bound is the integral tail estimate.
    double remainder_bound;
};

FavardTable favard_constant(int j, int terms = 2000);

/// C_{k,l} = K_{l-k}^l / K_l^{l-k}.
double lks_constant(int k, int l);

}  // namespace rfl::pw
