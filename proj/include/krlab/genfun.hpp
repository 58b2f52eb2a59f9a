#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krlab/qseries.hpp"

namespace krlab {

// One summand block of a multi-sum series. The q-exponent is the quadratic
// form (v'Qv + L.v + 2c)/2 over the rank variables; values are integral on
// the whole iteration domain. Numerator factors are finite Pochhammer
// products (possibly Laurent) and, for the four-rank alternates, the
// (1 + x^2 q^{linear}) correction.
struct PochFactor {
    int sign = -1;        // -1 builds (1 + q^...) factors
    int base = 1;         // first exponent; may be negative (Laurent)
    int step = 2;
    int count_var = -1;   // index into vars; -1 means a fixed count
    int count_offset = 0; // count = vars[count_var] + count_offset (or just offset)
};

struct XqFactor {              // (1 + x^2 q^{lin.v + c})
    std::vector<int> lin;
    int constant = 0;
};

struct SumBlock {
    std::vector<std::string> vars;
    std::vector<int> mins;              // per-variable lower bound
    std::vector<std::vector<int>> q2;   // symmetric matrix Q (doubled form)
    std::vector<int> q1;                // L (doubled form)
    int q0 = 0;                         // c, so exponent = (v'Qv + L.v + 2c)/2
    std::vector<int> x1;                // x-degree linear form
    int x0 = 0;
    std::vector<PochFactor> numerator;
    std::optional<XqFactor> xq;
    std::vector<PochFactor> denominator;  // inverted finite Pochhammers
};

struct SeriesRecipe {
    std::string id;
    std::vector<SumBlock> sums;
};

const std::vector<SeriesRecipe>& all_recipes();
const SeriesRecipe& recipe(const std::string& id);

// Evaluate a recipe exactly to the given truncation orders.
TruncatedSeries build_sum_series(const SeriesRecipe& r, int max_q, int max_x);
TruncatedSeries build_sum_series(const std::string& recipe_id, int max_q, int max_x);

// Truncation of the reciprocal infinite product for conjecture id 1..6.
TruncatedSeries build_conjecture_product(int id, int max_q);

struct EqualityVerdict {
    bool equal = true;
    int n = -1, m = -1;
    long long lhs = 0, rhs = 0;

    std::string str() const;
};

// Coefficientwise comparison up to q-order up_to_q (inclusive), all x-degrees
// both series carry. Throws ArgumentError when either side is truncated
// below up_to_q.
EqualityVerdict series_equal(const TruncatedSeries& a, const TruncatedSeries& b, int up_to_q);

// The raw recipe table (JSON text) shipped with the library.
const char* recipe_tables_json();

}  // namespace krlab
