#pragma once

#include <string>
#include <vector>

#include "krlab/common.hpp"

namespace krlab {

// Exact truncated power series in q (weight) and x (length). Coefficients
// are kept for 0 <= n <= max_q, 0 <= m <= max_x; everything beyond is
// discarded. No floating point anywhere.
class TruncatedSeries {
  public:
    TruncatedSeries(int max_q, int max_x);

    static TruncatedSeries zero(int max_q, int max_x) { return TruncatedSeries(max_q, max_x); }
    static TruncatedSeries one(int max_q, int max_x);
    static TruncatedSeries monomial(int max_q, int max_x, int n, int m, long long c = 1);

    int max_q() const { return max_q_; }
    int max_x() const { return max_x_; }

    long long coeff(int n, int m) const;
    void add_at(int n, int m, long long c);  // silently drops beyond truncation

    TruncatedSeries add(const TruncatedSeries& o) const;
    TruncatedSeries mul(const TruncatedSeries& o) const;
    // Multiply by q^dq x^dx. dq/dx must be >= 0; Laurent shifts are resolved
    // before a series is ever built (see LaurentFactor).
    TruncatedSeries shifted(int dq, int dx) const;

    // Specialize x = 1 (fold all x-degrees together). Result has max_x = 0.
    TruncatedSeries at_x1() const;

    bool operator==(const TruncatedSeries& o) const;

    // {"max_q":..., "max_x":..., "coeffs":[[n,m,"c"],...]} with coefficients
    // as decimal strings.
    std::string to_json() const;

  private:
    int max_q_;
    int max_x_;
    std::vector<std::vector<long long>> c_;  // c_[n][m]
};

// q^{q_shift} * body, with body a genuine power series. The only negative
// power the series displays need is the q^{-1} coming from a (-1/q; q^2)_n
// factor; the leading exponent polynomials absorb it.
struct LaurentFactor {
    int q_shift = 0;
    TruncatedSeries body;

    // Fail unless q_shift + extra_shift >= 0, then return the shifted body.
    TruncatedSeries resolve(int extra_shift, int x_degree) const;
};

// prod_{j=0}^{n-1} (1 - sign * q^{base_q_power + j*step}) as an exact
// polynomial. sign = +1 gives (q^b; q^s)_n factors, sign = -1 gives
// (-q^b; q^s)_n. Negative base powers produce a nonzero q_shift.
LaurentFactor poch_finite(int sign, int base_q_power, int step, int n, int max_q);

// 1 / prod_{j=0}^{n-1} (1 - q^{base_q_power + j*step}), truncated. Requires
// base_q_power >= 1. Generates partitions into parts from the n-element
// arithmetic list, any multiplicities.
TruncatedSeries inv_poch_series(int base_q_power, int step, int n, int max_q);

// Truncation of 1 / prod_{r in residues} (q^r; q^modulus)_infty. The q^n
// coefficient counts partitions of n into parts with residue in the set.
TruncatedSeries product_series_inverse(int modulus, const std::vector<int>& residues,
                                       int max_q);

}  // namespace krlab
