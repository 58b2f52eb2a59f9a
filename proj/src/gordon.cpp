#include "krlab/gordon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace krlab {

MarkedPartition gordon_mark(const Partition& p) {
    MarkedPartition mp;
    mp.parts = p.parts();
    mp.marks.resize(mp.parts.size());
    std::set<int> at_prev;  // marks used at value a-1
    std::set<int> at_cur;   // marks used at value a
    int cur = -1;
    for (size_t i = 0; i < mp.parts.size(); ++i) {
        const int a = mp.parts[i];
        if (a != cur) {
            if (a == cur + 1)
                at_prev = at_cur;
            else
                at_prev.clear();
            at_cur.clear();
            cur = a;
        }
        int mark = 1;
        while (at_prev.count(mark) || at_cur.count(mark)) ++mark;
        at_cur.insert(mark);
        mp.marks[i] = mark;
    }
    return mp;
}

namespace {

bool has_marked(const MarkedPartition& mp, int value, int mark) {
    for (size_t i = 0; i < mp.parts.size(); ++i)
        if (mp.parts[i] == value && mp.marks[i] == mark) return true;
    return false;
}

bool has_marked_ge(const MarkedPartition& mp, int value, int min_mark) {
    for (size_t i = 0; i < mp.parts.size(); ++i)
        if (mp.parts[i] == value && mp.marks[i] >= min_mark) return true;
    return false;
}

size_t find_part(const MarkedPartition& mp, PartRef at) {
    for (size_t i = 0; i < mp.parts.size(); ++i)
        if (mp.parts[i] == at.value && mp.marks[i] == at.mark) return i;
    throw MoveError("no " + std::to_string(at.mark) + "-marked part equal to " +
                    std::to_string(at.value));
}

MarkedPartition replace_part(const MarkedPartition& mp, size_t idx, int new_value) {
    std::vector<int> parts = mp.parts;
    parts[idx] = new_value;
    std::sort(parts.begin(), parts.end());
    return gordon_mark(Partition(parts));
}

}  // namespace

MarkedPartition forward_move_kind_r(const MarkedPartition& mp, PartRef at, int r) {
    if (at.mark != r) throw MoveError("forward move of the r-th kind needs an r-marked part");
    const size_t j = find_part(mp, at);
    const int v = mp.parts[j];

    // (a): no r+1 or higher marked parts equal to v or v+1
    if (has_marked_ge(mp, v, r + 1) || has_marked_ge(mp, v + 1, r + 1))
        throw MoveError("condition (a) fails: higher-marked part at value or value+1");

    // (b1): an r0-marked part = v-1 with r0 < r, no r0-marked part = v+1,
    // and no r0+1 or higher marked part = v-1. The last clause pins r0 to
    // the top mark present at v-1.
    int r0 = 0;
    for (int cand = r - 1; cand >= 1; --cand) {
        if (!has_marked(mp, v - 1, cand)) continue;
        if (has_marked(mp, v + 1, cand)) continue;
        if (has_marked_ge(mp, v - 1, cand + 1)) continue;
        r0 = cand;
        break;
    }
    if (r0 > 0) {
        size_t j0 = find_part(mp, PartRef{v - 1, r0});
        return replace_part(mp, j0, v);
    }

    // (b2): all lower marks present at v or v+1, and no r-marked part = v+2.
    bool b2 = !has_marked(mp, v + 2, r);
    for (int s = 1; s < r && b2; ++s)
        if (!has_marked(mp, v, s) && !has_marked(mp, v + 1, s)) b2 = false;
    if (!b2) throw MoveError("conditions (b1) and (b2) both fail");
    return replace_part(mp, j, v + 1);
}

MarkedPartition backward_move_kind_r(const MarkedPartition& mp, PartRef at, int r) {
    if (at.mark != r) throw MoveError("backward move of the r-th kind needs an r-marked part");
    const size_t j = find_part(mp, at);
    const int v = mp.parts[j];
    if (v == 1) throw MoveError("backward move undefined at a part equal to 1");

    // (c): no r+1 or greater marked parts equal to v or v+1
    if (has_marked_ge(mp, v, r + 1) || has_marked_ge(mp, v + 1, r + 1))
        throw MoveError("condition (c) fails: higher-marked part at value or value+1");

    // (d): smallest r0 <= r with an r0-marked part = v and no r0-marked
    // part = v-2.
    for (int r0 = 1; r0 <= r; ++r0) {
        if (!has_marked(mp, v, r0)) continue;
        if (has_marked(mp, v - 2, r0)) continue;
        size_t j0 = find_part(mp, PartRef{v, r0});
        return replace_part(mp, j0, v - 1);
    }
    throw MoveError("condition (d) fails: no admissible r0");
}

ClusterDecomposition extract_clusters(const MarkedPartition& mp) {
    ClusterDecomposition out;
    const size_t n = mp.parts.size();
    for (size_t i = 0; i < n; ++i)
        if (mp.marks[i] > 3)
            throw DecompositionError("mark " + std::to_string(mp.marks[i]) +
                                     " outside the supported families");

    std::vector<bool> used(n, false);
    // A part is a cluster top iff no (mark+1)-marked part sits at its value
    // or one above. Chain downward: the (s-1)-marked partner of an s-marked
    // member at value v is at v or v-1, and marking rules make it unique.
    for (size_t i = 0; i < n; ++i) {
        const int r = mp.marks[i];
        const int top = mp.parts[i];
        if (has_marked(mp, top, r + 1) || has_marked(mp, top + 1, r + 1)) continue;
        Cluster cl;
        cl.rank = r;
        cl.vals.assign(r, 0);
        cl.vals[r - 1] = top;
        used[i] = true;
        int v = top;
        bool ok = true;
        for (int s = r - 1; s >= 1; --s) {
            bool found = false;
            for (int cand : {v, v - 1}) {
                for (size_t k = 0; k < n && !found; ++k) {
                    if (used[k] || mp.marks[k] != s || mp.parts[k] != cand) continue;
                    cl.vals[s - 1] = cand;
                    used[k] = true;
                    v = cand;
                    found = true;
                }
                if (found) break;
            }
            if (!found) {
                ok = false;
                break;
            }
        }
        if (!ok)
            throw DecompositionError("cluster chain broken below the " + std::to_string(r) +
                                     "-marked " + std::to_string(top));
        out.clusters.push_back(std::move(cl));
    }
    for (size_t i = 0; i < n; ++i)
        if (!used[i])
            throw DecompositionError("part " + std::to_string(mp.parts[i]) +
                                     " not covered by any cluster");
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const Cluster& a, const Cluster& b) { return a.anchor() < b.anchor(); });
    for (const Cluster& c : out.clusters) {
        if (c.rank == 1) ++out.n1;
        if (c.rank == 2) ++out.n2;
        if (c.rank == 3) ++out.n3;
    }
    return out;
}

std::string render_marked(const MarkedPartition& mp) {
    int top = 0;
    for (int m : mp.marks) top = std::max(top, m);
    std::ostringstream os;
    for (int row = top; row >= 1; --row) {
        for (size_t i = 0; i < mp.parts.size(); ++i) {
            std::string cell = mp.marks[i] == row ? std::to_string(mp.parts[i]) : "";
            os << cell << std::string(cell.size() < 4 ? 4 - cell.size() : 1, ' ');
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace krlab
