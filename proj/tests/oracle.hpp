#pragma once

// Brute-force oracles for the test suites. These stay independent of the
// library's enumeration path: all partitions are generated plainly and
// filtered by predicates written directly from the condition statements.

#include <functional>
#include <vector>

#include "krlab/partitions.hpp"

namespace oracle {

inline void all_partitions_rec(int n, int min_part, std::vector<int>& acc,
                               const std::function<void(const std::vector<int>&)>& fn) {
    if (n == 0) {
        fn(acc);
        return;
    }
    for (int p = min_part; p <= n; ++p) {
        acc.push_back(p);
        all_partitions_rec(n - p, p, acc, fn);
        acc.pop_back();
    }
}

// Every partition of n, nondecreasing part order.
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    all_partitions_rec(n, 1, acc, [&](const std::vector<int>& p) { out.push_back(p); });
    return out;
}

// Difference-condition predicates, restated from scratch.
inline bool mod9_family(const std::vector<int>& a, int residue, int min_part, int capped,
                        int cap) {
    if (!a.empty() && a.front() < min_part) return false;
    int occ = 0;
    for (int x : a)
        if (capped && x == capped) ++occ;
    if (capped && occ > cap) return false;
    for (size_t j = 0; j + 2 < a.size(); ++j)
        if (a[j + 2] - a[j] < 3) return false;
    for (size_t j = 0; j + 1 < a.size(); ++j)
        if (a[j + 1] - a[j] <= 1 && (a[j] + a[j + 1]) % 3 != residue) return false;
    return true;
}

inline bool mod12_family(const std::vector<int>& a, int residue, int min_part, int capped,
                         int cap) {
    if (!a.empty() && a.front() < min_part) return false;
    int occ = 0;
    for (int x : a)
        if (capped && x == capped) ++occ;
    if (capped && occ > cap) return false;
    for (size_t j = 0; j + 3 < a.size(); ++j)
        if (a[j + 3] - a[j] < 3) return false;
    for (size_t j = 0; j + 2 < a.size(); ++j)
        if (a[j + 2] - a[j] <= 1 && (a[j] + a[j + 1] + a[j + 2]) % 3 != residue) return false;
    return true;
}

inline bool family_member(krlab::Variant v, const std::vector<int>& a) {
    using krlab::Variant;
    switch (v) {
        case Variant::KR1: return mod9_family(a, 0, 1, 0, 0);
        case Variant::KR2: return mod9_family(a, 0, 2, 0, 0);
        case Variant::KR3: return mod9_family(a, 0, 3, 0, 0);
        case Variant::KR4: return mod9_family(a, 2, 2, 0, 0);
        case Variant::KR3_1: return mod9_family(a, 0, 3, 3, 1);
        case Variant::KRB1: return mod9_family(a, 1, 1, 0, 0);
        case Variant::KRB4_2: return mod9_family(a, 2, 1, 1, 1);
        case Variant::KRB1_1: return mod9_family(a, 1, 1, 2, 1);
        case Variant::KR5: return mod12_family(a, 1, 1, 1, 1);
        case Variant::KR6: return mod12_family(a, 2, 2, 2, 1);
        case Variant::KRC1_2: return mod12_family(a, 1, 1, 0, 0);
        case Variant::KRC2_2: return mod12_family(a, 2, 1, 0, 0);
        case Variant::KRC2_1: return mod12_family(a, 2, 1, 1, 1);
        default: return false;
    }
}

// Count of family members of n with m parts, by filtering all partitions.
inline long long count_filtered(krlab::Variant v, int n, int m) {
    long long c = 0;
    for (const auto& p : all_partitions(n))
        if (static_cast<int>(p.size()) == m && family_member(v, p)) ++c;
    return c;
}

inline long long count_filtered_total(krlab::Variant v, int n) {
    long long c = 0;
    for (const auto& p : all_partitions(n))
        if (family_member(v, p)) ++c;
    return c;
}

}  // namespace oracle
