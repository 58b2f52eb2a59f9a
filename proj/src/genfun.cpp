#include "krlab/genfun.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "genfun_recipes.inc"

namespace krlab {

const char* recipe_tables_json() { return kRecipeTablesJson; }

namespace {

int var_index(const std::vector<std::string>& vars, const std::string& name) {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    throw ConfigError("recipe references unknown variable " + name);
}

PochFactor parse_poch(const nlohmann::json& j, const std::vector<std::string>& vars,
                      int default_sign) {
    PochFactor f;
    f.sign = j.value("sign", default_sign);
    f.base = j.at("base").get<int>();
    f.step = j.at("step").get<int>();
    if (j.contains("var")) {
        f.count_var = var_index(vars, j.at("var").get<std::string>());
        f.count_offset = j.value("offset", 0);
    } else {
        f.count_var = -1;
        f.count_offset = j.at("count").get<int>();
    }
    return f;
}

std::vector<SeriesRecipe> parse_recipes() {
    nlohmann::json root = nlohmann::json::parse(kRecipeTablesJson);
    std::vector<SeriesRecipe> out;
    for (const auto& jr : root.at("series")) {
        SeriesRecipe r;
        r.id = jr.at("id").get<std::string>();
        for (const auto& js : jr.at("sums")) {
            SumBlock b;
            b.vars = js.at("vars").get<std::vector<std::string>>();
            b.mins = js.at("min").get<std::vector<int>>();
            b.q2 = js.at("Q").get<std::vector<std::vector<int>>>();
            b.q1 = js.at("L").get<std::vector<int>>();
            b.q0 = js.at("c").get<int>();
            b.x1 = js.at("x").get<std::vector<int>>();
            b.x0 = js.value("x0", 0);
            for (const auto& jn : js.at("num")) b.numerator.push_back(parse_poch(jn, b.vars, -1));
            if (js.contains("xq")) {
                XqFactor xq;
                xq.lin = js.at("xq").at("lin").get<std::vector<int>>();
                xq.constant = js.at("xq").at("c").get<int>();
                b.xq = xq;
            }
            for (const auto& jd : js.at("den")) b.denominator.push_back(parse_poch(jd, b.vars, 1));
            const size_t k = b.vars.size();
            if (b.mins.size() != k || b.q2.size() != k || b.q1.size() != k || b.x1.size() != k)
                throw ConfigError("recipe " + r.id + " has inconsistent dimensions");
            for (const auto& row : b.q2)
                if (row.size() != k) throw ConfigError("recipe " + r.id + " Q not square");
            r.sums.push_back(std::move(b));
        }
        out.push_back(std::move(r));
    }
    return out;
}

long long doubled_exponent(const SumBlock& b, const std::vector<int>& v) {
    long long e2 = 2LL * b.q0;
    for (size_t i = 0; i < v.size(); ++i) {
        e2 += static_cast<long long>(b.q1[i]) * v[i];
        for (size_t j = 0; j < v.size(); ++j)
            e2 += static_cast<long long>(b.q2[i][j]) * v[i] * v[j];
    }
    return e2;
}

std::string tuple_str(const SumBlock& b, const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << b.vars[i] << "=" << v[i];
    os << ")";
    return os.str();
}

void add_block_term(const SumBlock& b, const std::vector<int>& v, TruncatedSeries& out,
                    int max_q, int max_x) {
    const long long e2 = doubled_exponent(b, v);
    if (e2 % 2 != 0)
        throw ConfigError("half-integral exponent at rank tuple " + tuple_str(b, v));
    const long long e = e2 / 2;

    int laurent_shift = 0;
    TruncatedSeries qpart = TruncatedSeries::one(max_q, 0);
    for (const PochFactor& f : b.numerator) {
        const int count = f.count_var < 0 ? f.count_offset : v[f.count_var] + f.count_offset;
        if (count < 0) throw ConfigError("negative factor length at " + tuple_str(b, v));
        LaurentFactor lf = poch_finite(f.sign, f.base, f.step, count, max_q);
        laurent_shift += lf.q_shift;
        qpart = qpart.mul(lf.body);
    }
    for (const PochFactor& f : b.denominator) {
        const int count = f.count_var < 0 ? f.count_offset : v[f.count_var] + f.count_offset;
        qpart = qpart.mul(inv_poch_series(f.base, f.step, count, max_q));
    }

    const long long shift = e + laurent_shift;
    if (shift < 0)
        throw LaurentError("series term with negative q-exponent at rank tuple " +
                           tuple_str(b, v));
    long long xdeg = b.x0;
    for (size_t i = 0; i < v.size(); ++i) xdeg += static_cast<long long>(b.x1[i]) * v[i];

    auto accumulate = [&](long long dq, long long dx) {
        if (dq > max_q) return;
        for (long long n = 0; n + dq <= max_q; ++n) {
            long long c = qpart.coeff(static_cast<int>(n), 0);
            if (c != 0 && dx <= max_x)
                out.add_at(static_cast<int>(n + dq), static_cast<int>(dx), c);
        }
    };
    accumulate(shift, xdeg);
    if (b.xq) {
        long long extra = b.xq->constant;
        for (size_t i = 0; i < v.size(); ++i)
            extra += static_cast<long long>(b.xq->lin[i]) * v[i];
        accumulate(shift + extra, xdeg + 2);
    }
}

// Iterate rank tuples in lexicographic order; the exponent grows in every
// variable, so each coordinate is cut off once the minimal reachable
// exponent passes the truncation (with slack for Laurent shifts and the
// negative constants).
void iterate_block(const SumBlock& b, int max_q, int max_x, TruncatedSeries& out) {
    const int slack = 3;
    std::vector<int> v(b.vars.size(), 0);
    std::function<void(size_t)> rec = [&](size_t d) {
        if (d == v.size()) {
            add_block_term(b, v, out, max_q, max_x);
            return;
        }
        for (int t = b.mins[d];; ++t) {
            v[d] = t;
            std::vector<int> probe = v;
            for (size_t j = d + 1; j < probe.size(); ++j) probe[j] = b.mins[j];
            if (doubled_exponent(b, probe) > 2LL * (max_q + slack)) break;
            rec(d + 1);
        }
        v[d] = b.mins[d];
    };
    rec(0);
}

}  // namespace

const std::vector<SeriesRecipe>& all_recipes() {
    static const std::vector<SeriesRecipe> r = parse_recipes();
    return r;
}

const SeriesRecipe& recipe(const std::string& id) {
    for (const SeriesRecipe& r : all_recipes())
        if (r.id == id) return r;
    throw ConfigError("unknown series recipe: " + id);
}

TruncatedSeries build_sum_series(const SeriesRecipe& r, int max_q, int max_x) {
    TruncatedSeries out(max_q, max_x);
    for (const SumBlock& b : r.sums) iterate_block(b, max_q, max_x, out);
    return out;
}

TruncatedSeries build_sum_series(const std::string& recipe_id, int max_q, int max_x) {
    return build_sum_series(recipe(recipe_id), max_q, max_x);
}

TruncatedSeries build_conjecture_product(int id, int max_q) {
    switch (id) {
        case 1: return product_series_inverse(9, {1, 3, 6, 8}, max_q);
        case 2: return product_series_inverse(9, {2, 3, 6, 7}, max_q);
        case 3: return product_series_inverse(9, {3, 4, 5, 6}, max_q);
        case 4: return product_series_inverse(9, {2, 3, 5, 8}, max_q);
        case 5: return product_series_inverse(12, {1, 3, 4, 6, 7, 10, 11}, max_q);
        case 6: return product_series_inverse(12, {2, 3, 5, 6, 7, 8, 11}, max_q);
        default: throw ArgumentError("conjecture id must be in 1..6");
    }
}

std::string EqualityVerdict::str() const {
    if (equal) return "equal";
    std::ostringstream os;
    os << "first difference at q^" << n << " x^" << m << ": " << lhs << " vs " << rhs;
    return os.str();
}

EqualityVerdict series_equal(const TruncatedSeries& a, const TruncatedSeries& b, int up_to_q) {
    if (a.max_q() < up_to_q || b.max_q() < up_to_q)
        throw ArgumentError("series truncated below the comparison order");
    const int mx = std::max(a.max_x(), b.max_x());
    for (int n = 0; n <= up_to_q; ++n)
        for (int m = 0; m <= mx; ++m) {
            const long long ca = m <= a.max_x() ? a.coeff(n, m) : 0;
            const long long cb = m <= b.max_x() ? b.coeff(n, m) : 0;
            if (ca != cb) return EqualityVerdict{false, n, m, ca, cb};
        }
    return EqualityVerdict{};
}

}  // namespace krlab
