#pragma once

#include <string>
#include <vector>

#include "krlab/partitions.hpp"

namespace krlab {

// A partition with its canonical Gordon marking. Parts equal to a value a
// get distinct marks, skipping any mark already used at a-1, smallest
// available mark first.
struct MarkedPartition {
    std::vector<int> parts;  // nondecreasing
    std::vector<int> marks;  // marks[i] is the mark of parts[i]

    Partition partition() const { return Partition(parts); }
    bool operator==(const MarkedPartition& o) const {
        return parts == o.parts && marks == o.marks;
    }
};

MarkedPartition gordon_mark(const Partition& p);

// An r-cluster: members vals[0] <= ... <= vals[r-1], vals[j] being the
// (j+1)-marked part, consecutive members differing by 0 or 1, and no
// (r+1)-marked part equal to the top member or one above it.
struct Cluster {
    int rank = 0;
    std::vector<int> vals;  // size == rank, vals[j] is the (j+1)-marked member

    int anchor() const { return vals.empty() ? 0 : vals[0]; }
    long long weight() const {
        long long w = 0;
        for (int v : vals) w += v;
        return w;
    }
    bool operator==(const Cluster& o) const { return rank == o.rank && vals == o.vals; }
};

struct ClusterDecomposition {
    std::vector<Cluster> clusters;  // ordered by 1-marked member
    int n1 = 0, n2 = 0, n3 = 0;
};

// The unique cluster cover of a marked partition with marks <= 3. Throws
// DecompositionError if a part cannot be covered or a higher mark occurs.
ClusterDecomposition extract_clusters(const MarkedPartition& mp);

// Identify a part by (value, mark) against the current marking; indices
// shift under re-marking, value/mark pairs do not.
struct PartRef {
    int value = 0;
    int mark = 0;
};

// Forward move of the r-th kind at the r-marked part `at` (Definition-level
// primitive; weight goes up by exactly 1). Throws MoveError when the
// preconditions fail. The result is canonically re-marked.
MarkedPartition forward_move_kind_r(const MarkedPartition& mp, PartRef at, int r);

// Backward move of the r-th kind (weight down by exactly 1).
MarkedPartition backward_move_kind_r(const MarkedPartition& mp, PartRef at, int r);

// Two-dimensional array rendering, rows indexed by mark from bottom to top.
// For failure messages and docs.
std::string render_marked(const MarkedPartition& mp);

}  // namespace krlab
