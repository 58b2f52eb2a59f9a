#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "krlab/bijection.hpp"
#include "krlab/genfun.hpp"

using namespace krlab;

TEST_CASE("base partitions and their weights") {
    BaseSpec kr1spec{Variant::KR1, 3, 2, 0, BaseCase::Auto};
    Partition b = base_partition(kr1spec);
    CHECK(b == Partition({1, 2, 4, 5, 7, 9, 11}));
    CHECK(b.weight() == 39);

    BaseSpec kr5spec{Variant::KR5, 3, 2, 2, BaseCase::Auto};
    Partition b5 = base_partition(kr5spec);
    CHECK(b5 == Partition({1, 2, 3, 4, 5, 7, 7, 8, 10, 10, 11, 13, 15}));
    CHECK(b5.weight() == 96);

    CHECK(base_partition(BaseSpec{Variant::KR2, 0, 0, 0, BaseCase::Auto}).empty());
    CHECK(base_partition(BaseSpec{Variant::KR6, 0, 0, 0, BaseCase::Auto}).empty());

    CHECK_THROWS_AS(base_partition(BaseSpec{Variant::KR2, 0, 1, 0, BaseCase::N1Pos}),
                    ArgumentError);
    CHECK_THROWS_AS(base_partition(BaseSpec{Variant::KRB1_1, 2, 1, 0, BaseCase::Auto}),
                    ArgumentError);
}

TEST_CASE("base weights equal the exponent polynomials") {
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n2 <= 4; ++n2) {
            CHECK(base_partition(BaseSpec{Variant::KR1, n1, n2, 0, BaseCase::Auto}).weight() ==
                  3 * n2 * n2 + n1 * n1 + 3 * n1 * n2);
            CHECK(base_partition(BaseSpec{Variant::KR2, n1, n2, 0, BaseCase::Auto}).weight() ==
                  3 * n2 * n2 + 3 * n2 + n1 * n1 + n1 + 3 * n1 * n2);
            CHECK(base_partition(BaseSpec{Variant::KR3, n1, n2, 0, BaseCase::Auto}).weight() ==
                  3 * n2 * n2 + 3 * n2 + n1 * n1 + 2 * n1 + 3 * n1 * n2);
            CHECK(base_partition(BaseSpec{Variant::KR4, n1, n2, 0, BaseCase::Auto}).weight() ==
                  3 * n2 * n2 + 2 * n2 + n1 * n1 + n1 + 3 * n1 * n2);
            CHECK(base_partition(BaseSpec{Variant::KRB1, n1, n2, 0, BaseCase::Auto}).weight() ==
                  3 * n2 * n2 + n2 + n1 * n1 + 3 * n1 * n2);
            if (n2 >= 1) {
                CHECK(base_partition(BaseSpec{Variant::KRB1_1, n1, n2, 0, BaseCase::II})
                          .weight() == 3 * n2 * n2 + 4 * n2 + n1 * n1 + n1 + 3 * n1 * n2);
                CHECK(base_partition(BaseSpec{Variant::KRB1_1, n1, n2, 0, BaseCase::III})
                          .weight() ==
                      3 * n2 * n2 + 4 * n2 + (n1 + 1) * (n1 + 1) + 3 * n1 * n2);
            }
            for (int n3 = 0; n3 <= 3; ++n3) {
                CHECK(base_partition(BaseSpec{Variant::KR5, n1, n2, n3, BaseCase::Auto})
                          .weight() ==
                      (9 * n3 * n3 + 5 * n3) / 2 + 2 * n2 * n2 + n2 + n1 * n1 + 6 * n3 * n2 +
                          3 * n3 * n1 + 2 * n2 * n1);
                CHECK(base_partition(BaseSpec{Variant::KR6, n1, n2, n3, BaseCase::Auto})
                          .weight() ==
                      (9 * n3 * n3 + 7 * n3) / 2 + 2 * n2 * n2 + 3 * n2 + n1 * n1 + n1 +
                          6 * n3 * n2 + 3 * n3 * n1 + 2 * n2 * n1);
                const long long krc_common = 2 * n2 * n2 + n2 + n1 * n1 + 6 * n3 * n2 +
                                             3 * n3 * n1 + 2 * n2 * n1;
                if (n2 >= 1) {
                    CHECK(base_partition(BaseSpec{Variant::KRC1_2, n1, n2, n3, BaseCase::Auto})
                              .weight() == (9 * n3 * n3 - n3) / 2 + krc_common - 1);
                    CHECK(base_partition(BaseSpec{Variant::KRC2_2, n1, n2, n3, BaseCase::Auto})
                              .weight() == (9 * n3 * n3 + n3) / 2 + krc_common - 1);
                } else {
                    CHECK(base_partition(BaseSpec{Variant::KRC1_2, n1, 0, n3, BaseCase::Auto})
                              .weight() == (9 * n3 * n3 - n3) / 2 + n1 * n1 + 3 * n3 * n1);
                    CHECK(base_partition(BaseSpec{Variant::KRC2_2, n1, 0, n3, BaseCase::Auto})
                              .weight() == (9 * n3 * n3 + n3) / 2 + n1 * n1 + 3 * n3 * n1);
                }
            }
        }
}

TEST_CASE("worked example: kr1 encode with trace") {
    MoveTuple t;
    t.spec = BaseSpec{Variant::KR1, 3, 2, 0, BaseCase::Auto};
    t.mu = {0, 1, 1};
    t.eta = {3, 6};
    MoveTrace trace;
    Partition out = encode(validate_tuple(t), &trace);
    CHECK(out == Partition({1, 4, 5, 7, 9, 12, 12}));
    CHECK(out.weight() == 50);

    // intermediate partitions after each composite move, as displayed
    std::vector<std::vector<int>> stops;
    for (const TraceStep& s : trace)
        if (!s.parts.empty()) stops.push_back(s.parts);
    const std::vector<std::vector<int>> expect = {
        {1, 2, 4, 5, 7, 9, 12},   // largest 1-cluster moved
        {1, 2, 4, 5, 7, 10, 12},  // middle 1-cluster moved
        {1, 2, 4, 7, 8, 10, 12},  // first move of the larger 2-cluster (one adjustment)
        {1, 2, 4, 7, 9, 12, 12},  // second move (two adjustments)
        {1, 4, 5, 7, 9, 12, 12},  // one move of the smaller 2-cluster
    };
    CHECK(stops == expect);
}

TEST_CASE("worked example: krb1-1 decode of 62") {
    Partition lambda({1, 6, 7, 9, 11, 14, 14});
    REQUIRE(satisfies(Variant::KRB1_1, lambda));
    MoveTrace trace;
    MoveTuple t = decode(Variant::KRB1_1, lambda, &trace);
    CHECK(t.spec.case_tag == BaseCase::III);
    CHECK(t.beta == Partition({1, 3, 4, 6, 7, 9, 11}));
    CHECK(t.beta.weight() == 41);
    CHECK(t.mu == std::vector<int>{3, 3});
    CHECK(t.eta == std::vector<int>{6, 9});
    CHECK(t.total_weight() == 62);
    CHECK(encode(t) == lambda);

    // the displayed intermediates of the stowing sequence
    std::vector<std::vector<int>> stops;
    for (const TraceStep& s : trace)
        if (!s.parts.empty()) stops.push_back(s.parts);
    const std::vector<std::vector<int>> key = {
        {1, 5, 5, 9, 11, 14, 14},   // smaller 2-cluster after one backward move
        {1, 3, 4, 9, 11, 14, 14},   // stowed at (3,4)
        {1, 3, 4, 9, 10, 12, 14},   // larger 2-cluster: one move, two adjustments
        {1, 3, 4, 6, 7, 12, 14},    // stowed at (6,7)
    };
    for (const auto& k : key)
        CHECK_MESSAGE(std::find(stops.begin(), stops.end(), k) != stops.end(),
                      "missing intermediate");
}

TEST_CASE("worked example: kr5 encode of 116") {
    MoveTuple t;
    t.spec = BaseSpec{Variant::KR5, 3, 2, 2, BaseCase::Auto};
    t.mu = {1, 1, 1};
    t.eta = {0, 5};
    t.nu = {3, 9};
    MoveTrace trace;
    Partition out = encode(validate_tuple(t), &trace);
    CHECK(out == Partition({1, 2, 4, 6, 6, 7, 9, 11, 11, 13, 15, 15, 16}));
    CHECK(out.weight() == 116);

    std::vector<std::vector<int>> stops;
    for (const TraceStep& s : trace)
        if (!s.parts.empty()) stops.push_back(s.parts);
    const std::vector<std::vector<int>> key = {
        // after mu: the smallest 1-cluster prestidigitated through the 3-clusters
        {1, 2, 3, 4, 6, 6, 7, 9, 9, 10, 12, 14, 16},
        // first eta move on the larger 2-cluster
        {1, 2, 4, 4, 5, 7, 7, 8, 10, 10, 12, 14, 16},
        // four more 2nd-kind moves
        {1, 2, 4, 4, 5, 7, 7, 8, 10, 12, 14, 14, 16},
        // three forward moves on the larger 3-cluster
        {1, 2, 4, 4, 5, 7, 9, 9, 10, 12, 14, 14, 16},
        {1, 2, 4, 4, 5, 7, 9, 11, 11, 12, 14, 14, 16},
        {1, 2, 4, 4, 5, 7, 9, 11, 11, 13, 15, 15, 16},
    };
    for (const auto& k : key)
        CHECK_MESSAGE(std::find(stops.begin(), stops.end(), k) != stops.end(),
                      "missing intermediate");
}

TEST_CASE("worked example: krc1-2 decode of 116") {
    Partition lambda({1, 2, 4, 6, 6, 7, 9, 11, 11, 13, 15, 15, 16});
    REQUIRE(satisfies(Variant::KRC1_2, lambda));
    MoveTuple t = decode(Variant::KRC1_2, lambda);
    CHECK(t.beta == Partition({1, 1, 2, 4, 4, 5, 7, 7, 9, 10, 11, 13, 15}));
    CHECK(t.beta.weight() == 89);
    CHECK(t.mu == std::vector<int>{1, 1, 1});
    CHECK(t.extra_move);
    CHECK(t.eta == std::vector<int>{0, 5});
    CHECK(t.nu == std::vector<int>{6, 12});
    CHECK(t.total_weight() == 116);
    CHECK(encode(t) == lambda);
}

TEST_CASE("base inputs decode to all-zero tuples") {
    const BaseSpec specs[] = {
        {Variant::KR1, 2, 2, 0, BaseCase::Auto},
        {Variant::KR2, 2, 2, 0, BaseCase::Auto},
        {Variant::KR3, 1, 2, 0, BaseCase::Auto},
        {Variant::KR4, 2, 1, 0, BaseCase::Auto},
        {Variant::KRB1_1, 1, 2, 0, BaseCase::II},
        {Variant::KRB1_1, 1, 2, 0, BaseCase::III},
        {Variant::KR5, 2, 1, 1, BaseCase::Auto},
        {Variant::KR6, 1, 1, 1, BaseCase::Auto},
        {Variant::KRC1_2, 1, 2, 1, BaseCase::Auto},
        {Variant::KRC2_2, 1, 2, 1, BaseCase::Auto},
        {Variant::KRC2_1, 1, 1, 1, BaseCase::Auto},
    };
    for (const BaseSpec& s : specs) {
        Partition b = base_partition(s);
        MoveTuple t = decode(s.variant, b);
        CHECK(t.beta == b);
        for (int x : t.mu) CHECK(x == 0);
        for (int x : t.eta) CHECK(x == 0);
        for (int x : t.nu) CHECK(x == 0);
        CHECK(!t.extra_move);
        CHECK(encode(t) == b);
    }
}

TEST_CASE("tuple space examples") {
    int count = 0;
    tuple_space(BaseSpec{Variant::KR1, 0, 0, 0, BaseCase::Auto}, 5,
                [&](const MoveTuple&) { ++count; });
    CHECK(count == 1);

    count = 0;
    tuple_space(BaseSpec{Variant::KR1, 1, 0, 0, BaseCase::Auto}, 3,
                [&](const MoveTuple&) { ++count; });
    CHECK(count == 3);  // base {1}, mu in {0,1,2}
}

TEST_CASE("tuple space cardinality equals enumeration") {
    const int N = 16;
    for (Variant v : {Variant::KR1, Variant::KR2, Variant::KR3, Variant::KR4, Variant::KRB1,
                      Variant::KRB1_1, Variant::KR5, Variant::KR6, Variant::KRC1_2,
                      Variant::KRC2_2, Variant::KRC2_1}) {
        std::map<long long, long long> by_weight;
        all_tuples(v, N, [&](const MoveTuple& t) { ++by_weight[t.total_weight()]; });
        CountTable table = enumerate(v, N);
        for (int n = 0; n <= N; ++n)
            CHECK_MESSAGE(by_weight[n] == table.total(n),
                          variant_info(v).name << " weight " << n << ": tuples "
                                               << by_weight[n] << " members " << table.total(n));
    }
}

TEST_CASE("kr3-1 and krb4-2 encode images realize their sums exactly") {
    // Their predicates overcount (see test_genfun), but the bijections do
    // generate precisely the partitions the three-sum expansions count:
    // encode is injective on the tuple space and the image coefficients
    // match the series.
    const int N = 26;
    const std::pair<Variant, const char*> defective[] = {{Variant::KR3_1, "kr3-1"},
                                                         {Variant::KRB4_2, "krb4-2"}};
    for (const auto& [v, id] : defective) {
        std::set<Partition> image;
        std::map<std::pair<int, int>, long long> img;
        bool injective = true;
        bool tuples_ok = true;
        all_tuples(v, N, [&](const MoveTuple& t) {
            Partition p = encode(t);
            if (!image.insert(p).second) injective = false;
            ++img[{static_cast<int>(p.weight()), p.length()}];
            MoveTuple back = decode(v, p);
            if (!(back == t)) tuples_ok = false;
        });
        CHECK(injective);
        CHECK(tuples_ok);
        TruncatedSeries s = build_sum_series(id, N, N);
        for (int n = 0; n <= N; ++n)
            for (int m = 0; m <= n; ++m) {
                const long long image_count = img[{n, m}];
                CHECK_MESSAGE(s.coeff(n, m) == image_count, id << " image vs series at (" << n
                                                               << "," << m << ")");
            }
        // every image member satisfies the stated conditions (the predicate
        // family is a strict superset)
        for (const Partition& p : image) CHECK(satisfies(v, p));
    }
}

TEST_CASE("round trips both ways at moderate size") {
    const int N = 18;
    for (Variant v : {Variant::KR1, Variant::KR2, Variant::KR3, Variant::KR4, Variant::KR5,
                      Variant::KR6, Variant::KRB1_1, Variant::KRC1_2, Variant::KRC2_2}) {
        for (int n = 0; n <= N; ++n)
            for (const Partition& p : members(v, n)) {
                MoveTuple t = decode(v, p);
                CHECK(t.total_weight() == p.weight());
                Partition back = encode(t);
                CHECK_MESSAGE(back == p, variant_info(v).name << ": " << p.str() << " -> "
                                                              << t.str() << " -> "
                                                              << back.str());
            }
        all_tuples(v, N, [&](const MoveTuple& t) {
            Partition p = encode(t);
            CHECK(p.weight() == t.total_weight());
            MoveTuple back = decode(v, p);
            CHECK_MESSAGE(back == t, variant_info(v).name << ": " << t.str() << " -> "
                                                          << p.str() << " -> " << back.str());
        });
    }
}

TEST_CASE("decode rejects non-members") {
    CHECK_THROWS_AS(decode(Variant::KR1, Partition({3, 3, 3})), ArgumentError);
    CHECK_THROWS_AS(decode(Variant::KR2, Partition({1})), ArgumentError);
}

TEST_CASE("invalid tuples are rejected") {
    MoveTuple t;
    t.spec = BaseSpec{Variant::KR1, 1, 1, 0, BaseCase::Auto};
    t.mu = {1};
    t.eta = {2};  // not a multiple of 3
    CHECK_THROWS_AS(validate_tuple(t), ArgumentError);
    t.eta = {3};
    CHECK_NOTHROW(validate_tuple(t));
    t.mu = {2, 1};  // wrong arity
    CHECK_THROWS_AS(validate_tuple(t), ArgumentError);

    MoveTuple u;
    u.spec = BaseSpec{Variant::KR5, 0, 2, 0, BaseCase::Auto};
    u.mu = {};
    u.eta = {1, 1};  // repeated odd part
    u.nu = {};
    CHECK_THROWS_AS(validate_tuple(u), ArgumentError);
    u.eta = {1, 2};
    CHECK_NOTHROW(validate_tuple(u));
}
