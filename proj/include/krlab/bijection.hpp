#pragma once

#include <functional>
#include <string>
#include <vector>

#include "krlab/gordon.hpp"
#include "krlab/partitions.hpp"

namespace krlab {

// Which base-partition template applies. Most variants have a single
// template; the multi-case ones split by which cluster counts vanish, and
// krb1-1 additionally by whether the part 1 is present (case III pins it).
enum class BaseCase {
    Auto,    // resolve from the counts where unambiguous
    Single,  // the variant's only template
    N1Zero,
    N1Pos,
    N2Zero,
    N2Pos,
    Both,  // kr3-1: n1 >= 1 and n2 >= 1
    I,     // krb1-1: no 2-clusters
    II,    // krb1-1: 2-clusters, no part 1
    III,   // krb1-1: 2-clusters and a pinned part 1
};

struct BaseSpec {
    Variant variant = Variant::KR1;
    int n1 = 0;  // number of 1-clusters that move (krb1-1 III excludes the pinned 1)
    int n2 = 0;
    int n3 = 0;
    BaseCase case_tag = BaseCase::Auto;
};

// Resolve Auto, validate counts against the case. Throws ArgumentError on
// inconsistent combinations (e.g. krb1-1 with n2 >= 1 needs an explicit
// II/III choice).
BaseSpec resolve_case(const BaseSpec& spec);

// The minimal-weight family member with the prescribed cluster counts.
Partition base_partition(const BaseSpec& spec);

// Minimal weight of any family member whose raw cluster counts are
// (c1, c2, c3); minimum over the applicable templates. Used by the base
// minimality audit.
long long base_min_weight(Variant v, int c1, int c2, int c3);

// The decomposition of a family member: base plus per-cluster move totals.
// Components are nondecreasing and may contain zeros. |lambda| =
// |beta| + |mu| + |eta| + |nu| + (extra_move ? 1 : 0).
struct MoveTuple {
    BaseSpec spec;
    Partition beta;
    std::vector<int> mu;
    std::vector<int> eta;
    std::vector<int> nu;
    bool extra_move = false;

    long long total_weight() const;
    bool operator==(const MoveTuple& o) const;
    std::string str() const;
};

// Validate all tuple invariants for its variant; fills beta when empty.
MoveTuple validate_tuple(MoveTuple t);

struct TraceStep {
    std::string op;    // "move", "adjust", "swap-step", "extra", "stow"
    int rank = 0;      // rank of the cluster acted on
    int anchor = 0;    // its 1-marked value after the step
    long long weight_delta = 0;
    std::vector<int> parts;  // partition after this step (composite level only)
};
using MoveTrace = std::vector<TraceStep>;
std::string trace_to_json_lines(const MoveTrace& trace);

// Apply the variant's forward moves to a valid tuple. Throws ArgumentError
// for invariant-violating tuples and IntegrityError if the move machinery
// ever leaves the family (a bug, surfaced loudly).
Partition encode(const MoveTuple& tuple, MoveTrace* trace = nullptr);

// Decompose a family member into its tuple; encode(decode(p)) == p.
MoveTuple decode(Variant v, const Partition& p, MoveTrace* trace = nullptr);

// All valid tuples for the given resolved spec with total weight <= max_weight.
void tuple_space(const BaseSpec& spec, long long max_weight,
                 const std::function<void(const MoveTuple&)>& fn);

// All valid tuples across every (counts, case) combination of the variant.
void all_tuples(Variant v, long long max_weight,
                const std::function<void(const MoveTuple&)>& fn);

// Variants with a constructive or shift-composed bijection (everything but
// the congruence enumerants).
bool has_bijection(Variant v);

}  // namespace krlab
