#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "krlab/gordon.hpp"
#include "oracle.hpp"

using namespace krlab;

namespace {
const Partition kExample({2, 2, 3, 4, 5, 6, 6, 7, 9, 11, 13, 13, 15, 15, 16, 17, 18});
}

TEST_CASE("gordon marking of the running example") {
    MarkedPartition mp = gordon_mark(kExample);
    CHECK(mp.marks == std::vector<int>{1, 2, 3, 1, 2, 1, 3, 2, 1, 1, 1, 2, 1, 2, 3, 1, 2});
}

TEST_CASE("marking simple partitions") {
    CHECK(gordon_mark(Partition({5})).marks == std::vector<int>{1});
    CHECK(gordon_mark(Partition({1, 1, 1})).marks == std::vector<int>{1, 2, 3});
    CHECK(gordon_mark(Partition({1, 4, 5})).marks == std::vector<int>{1, 1, 2});
}

TEST_CASE("cluster extraction on the running example") {
    ClusterDecomposition dec = extract_clusters(gordon_mark(kExample));
    CHECK(dec.n1 == 2);
    CHECK(dec.n2 == 3);
    CHECK(dec.n3 == 3);
    std::vector<Cluster> expect = {
        {3, {2, 2, 3}}, {3, {4, 5, 6}}, {2, {6, 7}},    {1, {9}},
        {1, {11}},      {2, {13, 13}},  {3, {15, 15, 16}}, {2, {17, 18}},
    };
    REQUIRE(dec.clusters.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(dec.clusters[i] == expect[i]);

    CHECK(extract_clusters(gordon_mark(Partition())).clusters.empty());

    ClusterDecomposition d2 = extract_clusters(gordon_mark(Partition({1, 4, 5})));
    REQUIRE(d2.clusters.size() == 2);
    CHECK(d2.clusters[0] == Cluster{1, {1}});
    CHECK(d2.clusters[1] == Cluster{2, {4, 5}});

    // marks above 3 are rejected
    CHECK_THROWS_AS(extract_clusters(gordon_mark(Partition({1, 1, 1, 1}))),
                    DecompositionError);
}

TEST_CASE("forward move of the 3rd kind on the running example") {
    MarkedPartition mp = gordon_mark(kExample);
    MarkedPartition moved = forward_move_kind_r(mp, PartRef{16, 3}, 3);
    // the 2-marked 15 becomes 16
    CHECK(moved.partition() ==
          Partition({2, 2, 3, 4, 5, 6, 6, 7, 9, 11, 13, 13, 15, 16, 16, 17, 18}));

    // and the backward move of the 3rd kind on the 3-marked 6 lowers it to 5
    MarkedPartition back = backward_move_kind_r(moved, PartRef{6, 3}, 3);
    CHECK(back.partition() ==
          Partition({2, 2, 3, 4, 5, 5, 6, 7, 9, 11, 13, 13, 15, 16, 16, 17, 18}));
}

TEST_CASE("first kind moves") {
    MarkedPartition mp = gordon_mark(Partition({1, 4, 5}));
    MarkedPartition fwd = forward_move_kind_r(mp, PartRef{1, 1}, 1);
    CHECK(fwd.partition() == Partition({2, 4, 5}));
    MarkedPartition back = backward_move_kind_r(fwd, PartRef{2, 1}, 1);
    CHECK(back.partition() == Partition({1, 4, 5}));
}

TEST_CASE("move preconditions") {
    MarkedPartition lone = gordon_mark(Partition({5}));
    CHECK_THROWS_AS(forward_move_kind_r(lone, PartRef{5, 2}, 2), MoveError);
    CHECK_THROWS_AS(backward_move_kind_r(gordon_mark(Partition({1})), PartRef{1, 1}, 1),
                    MoveError);
}

TEST_CASE("canonicality of marking after moves") {
    MarkedPartition mp = gordon_mark(kExample);
    MarkedPartition moved = forward_move_kind_r(mp, PartRef{16, 3}, 3);
    CHECK(gordon_mark(moved.partition()) == moved);
}

TEST_CASE("move and inverse move over family members") {
    // wherever a forward move applies, the matching backward move undoes it
    const int N = 14;
    for (Variant v : {Variant::KR1, Variant::KR5, Variant::KR6}) {
        for (int n = 1; n <= N; ++n) {
            for (const Partition& p : members(v, n)) {
                MarkedPartition mp = gordon_mark(p);
                for (size_t i = 0; i < mp.parts.size(); ++i) {
                    const int r = mp.marks[i];
                    MarkedPartition fwd;
                    try {
                        fwd = forward_move_kind_r(mp, PartRef{mp.parts[i], r}, r);
                    } catch (const MoveError&) {
                        continue;
                    }
                    CHECK(fwd.partition().weight() == p.weight() + 1);
                    // the moved part value is the unique changed one
                    MarkedPartition back;
                    bool undone = false;
                    for (size_t j = 0; j < fwd.parts.size() && !undone; ++j) {
                        try {
                            back = backward_move_kind_r(
                                fwd, PartRef{fwd.parts[j], fwd.marks[j]}, fwd.marks[j]);
                        } catch (const MoveError&) {
                            continue;
                        }
                        if (back == mp) undone = true;
                    }
                    CHECK_MESSAGE(undone, "no inverse for a forward move on " << p.str());
                }
            }
        }
    }
}

TEST_CASE("marking structure property") {
    // every r-marked part a with r > 1 has an s-marked part at a-1 or a for
    // each s < r
    const int N = 20;
    for (Variant v : {Variant::KR1, Variant::KR3_1, Variant::KR5, Variant::KRC2_2}) {
        for (int n = 0; n <= N; ++n)
            for (const Partition& p : members(v, n)) {
                MarkedPartition mp = gordon_mark(p);
                for (size_t i = 0; i < mp.parts.size(); ++i)
                    for (int s = 1; s < mp.marks[i]; ++s) {
                        bool found = false;
                        for (size_t j = 0; j < mp.parts.size() && !found; ++j)
                            if (mp.marks[j] == s &&
                                (mp.parts[j] == mp.parts[i] || mp.parts[j] == mp.parts[i] - 1))
                                found = true;
                        CHECK(found);
                    }
            }
    }
}

TEST_CASE("rendering puts marks on rows") {
    // 1+1+2 marks as 1,2,3: a single 3-cluster, rendered on three rows
    std::string r = render_marked(gordon_mark(Partition({1, 1, 2})));
    CHECK(r.find('2') != std::string::npos);
    CHECK(std::count(r.begin(), r.end(), '\n') == 3);
}
