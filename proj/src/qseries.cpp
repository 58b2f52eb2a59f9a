#include "krlab/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace krlab {

TruncatedSeries::TruncatedSeries(int max_q, int max_x) : max_q_(max_q), max_x_(max_x) {
    if (max_q < 0 || max_x < 0) throw ArgumentError("truncation orders must be nonnegative");
    c_.assign(max_q_ + 1, std::vector<long long>(max_x_ + 1, 0));
}

TruncatedSeries TruncatedSeries::one(int max_q, int max_x) {
    TruncatedSeries s(max_q, max_x);
    s.c_[0][0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int max_q, int max_x, int n, int m, long long c) {
    TruncatedSeries s(max_q, max_x);
    s.add_at(n, m, c);
    return s;
}

long long TruncatedSeries::coeff(int n, int m) const {
    if (n < 0 || m < 0) return 0;
    if (n > max_q_ || m > max_x_)
        throw ArgumentError("coefficient query beyond truncation order");
    return c_[n][m];
}

void TruncatedSeries::add_at(int n, int m, long long c) {
    if (n < 0 || m < 0) throw LaurentError("negative exponent in series term");
    if (n > max_q_ || m > max_x_) return;
    c_[n][m] = checked_add(c_[n][m], c);
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& o) const {
    // Mixing truncation orders truncates to the minimum.
    TruncatedSeries r(std::min(max_q_, o.max_q_), std::min(max_x_, o.max_x_));
    for (int n = 0; n <= r.max_q_; ++n)
        for (int m = 0; m <= r.max_x_; ++m)
            r.c_[n][m] = checked_add(c_[n][m], o.c_[n][m]);
    return r;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(max_q_, o.max_q_), std::min(max_x_, o.max_x_));
    for (int n = 0; n <= max_q_; ++n)
        for (int m = 0; m <= max_x_; ++m) {
            long long a = c_[n][m];
            if (a == 0) continue;
            const int nq = std::min(o.max_q_, r.max_q_ - n);
            const int nx = std::min(o.max_x_, r.max_x_ - m);
            if (n > r.max_q_ || m > r.max_x_) continue;
            for (int u = 0; u <= nq; ++u) {
                const auto& row = o.c_[u];
                auto& out = r.c_[n + u];
                for (int w = 0; w <= nx; ++w) {
                    long long b = row[w];
                    if (b == 0) continue;
                    out[m + w] = checked_add(out[m + w], checked_mul(a, b));
                }
            }
        }
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int dq, int dx) const {
    if (dq < 0 || dx < 0) throw LaurentError("negative monomial shift on a power series");
    TruncatedSeries r(max_q_, max_x_);
    for (int n = 0; n + dq <= max_q_; ++n)
        for (int m = 0; m + dx <= max_x_; ++m) r.c_[n + dq][m + dx] = c_[n][m];
    return r;
}

TruncatedSeries TruncatedSeries::at_x1() const {
    TruncatedSeries r(max_q_, 0);
    for (int n = 0; n <= max_q_; ++n) {
        long long t = 0;
        for (int m = 0; m <= max_x_; ++m) t = checked_add(t, c_[n][m]);
        r.c_[n][0] = t;
    }
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    if (max_q_ != o.max_q_ || max_x_ != o.max_x_) return false;
    return c_ == o.c_;
}

std::string TruncatedSeries::to_json() const {
    std::ostringstream os;
    os << "{\"max_q\":" << max_q_ << ",\"max_x\":" << max_x_ << ",\"coeffs\":[";
    bool first = true;
    for (int n = 0; n <= max_q_; ++n)
        for (int m = 0; m <= max_x_; ++m) {
            if (c_[n][m] == 0) continue;
            if (!first) os << ",";
            first = false;
            os << "[" << n << "," << m << ",\"" << c_[n][m] << "\"]";
        }
    os << "]}";
    return os.str();
}

TruncatedSeries LaurentFactor::resolve(int extra_shift, int x_degree) const {
    const int total = q_shift + extra_shift;
    if (total < 0)
        throw LaurentError("Laurent factor leaves negative q-exponent after combining");
    return body.shifted(total, x_degree);
}

LaurentFactor poch_finite(int sign, int base_q_power, int step, int n, int max_q) {
    if (n < 0) throw ArgumentError("pochhammer length must be nonnegative");
    if (step < 1) throw ArgumentError("pochhammer step must be >= 1");
    if (sign != 1 && sign != -1) throw ArgumentError("pochhammer sign must be +1 or -1");
    int shift = 0;
    TruncatedSeries body = TruncatedSeries::one(max_q, 0);
    for (int j = 0; j < n; ++j) {
        const int e = base_q_power + j * step;
        TruncatedSeries factor(max_q, 0);
        if (e >= 0) {
            // 1 - sign*q^e
            factor.add_at(0, 0, 1);
            factor.add_at(e, 0, -sign);
        } else {
            // (1 - sign*q^e) = q^e (q^{-e} - sign)
            shift += e;
            factor.add_at(0, 0, -sign);
            factor.add_at(-e, 0, 1);
        }
        body = body.mul(factor);
    }
    return LaurentFactor{shift, std::move(body)};
}

TruncatedSeries inv_poch_series(int base_q_power, int step, int n, int max_q) {
    if (base_q_power < 1) throw ArgumentError("inverse pochhammer base must be >= 1");
    if (step < 1) throw ArgumentError("pochhammer step must be >= 1");
    if (n < 0) throw ArgumentError("pochhammer length must be nonnegative");
    std::vector<long long> c(max_q + 1, 0);
    c[0] = 1;
    for (int j = 0; j < n; ++j) {
        const int v = base_q_power + j * step;
        if (v > max_q) break;
        // multiply by 1/(1-q^v): ascending update is the geometric series
        for (int k = v; k <= max_q; ++k) c[k] = checked_add(c[k], c[k - v]);
    }
    TruncatedSeries r(max_q, 0);
    for (int k = 0; k <= max_q; ++k) r.add_at(k, 0, c[k]);
    return r;
}

TruncatedSeries product_series_inverse(int modulus, const std::vector<int>& residues,
                                       int max_q) {
    if (modulus < 2) throw ArgumentError("modulus must be >= 2");
    if (residues.empty()) throw ArgumentError("residue set must be nonempty");
    for (int r : residues)
        if (r < 1 || r > modulus) throw ArgumentError("residue out of range [1, modulus]");
    std::vector<long long> c(max_q + 1, 0);
    c[0] = 1;
    for (int v = 1; v <= max_q; ++v) {
        int r = v % modulus;
        if (r == 0) r = modulus;
        if (std::find(residues.begin(), residues.end(), r) == residues.end()) continue;
        for (int k = v; k <= max_q; ++k) c[k] = checked_add(c[k], c[k - v]);
    }
    TruncatedSeries out(max_q, 0);
    for (int k = 0; k <= max_q; ++k) out.add_at(k, 0, c[k]);
    return out;
}

}  // namespace krlab
