#include <catch2/catch_amalgamated.hpp>

#include "nilpiece/partitions.hpp"

using namespace nilpiece;

namespace {
Bipartition bp(std::vector<int> mu, std::vector<int> nu) {
    return Bipartition(std::move(mu), std::move(nu));
}
Partition pt(std::vector<int> p) { return Partition(std::move(p)); }
Composition cp(std::vector<int> p) { return Composition(std::move(p)); }
}  // namespace

TEST_CASE("canonical form strips trailing zeros") {
    CHECK(cp({1, 1, 0, 1, 0, 0}) == cp({1, 1, 0, 1}));
    CHECK(cp({}) == cp({0, 0}));
    CHECK(cp({2, 1}).weight() == 3);
    CHECK_THROWS_AS(pt({1, 2}), std::invalid_argument);
}

TEST_CASE("dominance order basics") {
    CHECK(dominance_leq(cp({1, 1, 1, 1}), cp({2, 1, 1})));
    CHECK(dominance_leq(cp({2, 1}), cp({2, 1})));
    CHECK_FALSE(dominance_leq(cp({2, 1, 1}), cp({1, 1, 1, 1})));
    CHECK_THROWS_AS(dominance_leq(cp({2}), cp({1})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order on P_n for n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        auto ps = enumerate_partitions(n);
        for (const auto& a : ps) {
            CHECK(dominance_leq(a.as_composition(), a.as_composition()));
            for (const auto& b : ps) {
                bool ab = dominance_leq(a.as_composition(), b.as_composition());
                bool ba = dominance_leq(b.as_composition(), a.as_composition());
                if (ab && ba) CHECK(a == b);
                if (!ab) continue;
                for (const auto& c : ps)
                    if (dominance_leq(b.as_composition(), c.as_composition()))
                        CHECK(dominance_leq(a.as_composition(), c.as_composition()));
            }
        }
    }
}

TEST_CASE("interleave and its inverse") {
    CHECK(interleave(bp({1}, {1, 1})) == cp({1, 1, 0, 1}));
    CHECK(interleave(bp({}, {})) == cp({}));
    CHECK(interleave(bp({2}, {})) == cp({2}));

    CHECK(from_quasi_partition(cp({1, 1, 0, 1})) == bp({1}, {1, 1}));
    CHECK(from_quasi_partition(cp({2, 2})) == bp({2}, {2}));
    CHECK(from_quasi_partition(cp({1, 2})) == bp({1}, {2}));
    CHECK_THROWS_AS(from_quasi_partition(cp({1, 0, 2})), std::invalid_argument);

    for (int n = 0; n <= 8; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            Composition c = interleave(b);
            CHECK(c.is_quasi_partition());
            CHECK(from_quasi_partition(c) == b);
        }
}

TEST_CASE("interleaved dominance on bipartitions") {
    CHECK(bipartition_leq(bp({}, {2, 1}), bp({1}, {1, 1})));
    CHECK(bipartition_leq(bp({1, 1, 1}, {}), bp({1}, {1, 1})));
    CHECK_FALSE(bipartition_leq(bp({1}, {1, 1}), bp({}, {2, 1})));
}

TEST_CASE("b statistic") {
    CHECK(b_stat(bp({5}, {})) == 0);
    CHECK(b_stat(bp({1}, {1, 1})) == 4);
    CHECK(b_stat(bp({}, {1, 1, 1})) == 9);
    for (int n = 0; n <= 8; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            Composition c = interleave(b);
            int s = 0;
            for (int i = 1; i <= c.size(); ++i) s += (i - 1) * c.at(i);
            CHECK(b_stat(b) == s);
        }
}

TEST_CASE("partition arithmetic") {
    CHECK(add_parts(pt({2, 1}), pt({2, 1})) == pt({4, 2}));
    CHECK(add_parts(pt({1}), pt({1, 1})) == pt({2, 1}));
    CHECK(add_parts(pt({3, 2}), pt({})) == pt({3, 2}));

    CHECK(duplicate(pt({2, 1})) == pt({2, 2, 1, 1}));
    CHECK(duplicate(pt({})) == pt({}));
    CHECK(duplicate(pt({3})) == pt({3, 3}));

    CHECK(multiplicity(pt({2, 2, 1, 1, 1}), 1) == 3);
    CHECK(multiplicity(pt({2, 2}), 3) == 0);
    CHECK(multiplicity(pt({4}), 4) == 1);

    CHECK(head_multiplicity(pt({4, 4, 2})) == HeadMultiplicity{false, 2});
    CHECK(head_multiplicity(pt({})).infinite);
    CHECK(head_multiplicity(pt({1, 1, 1})) == HeadMultiplicity{false, 3});
}

TEST_CASE("enumeration") {
    CHECK(enumerate_bipartitions(0) == std::vector<Bipartition>{bp({}, {})});
    CHECK(enumerate_bipartitions(2).size() == 5);
    CHECK(enumerate_partitions(4).size() == 5);
    // Deterministic order: interleaved composition, descending lex.
    auto q2 = enumerate_bipartitions(2);
    CHECK(q2[0] == bp({2}, {}));
    CHECK(q2[1] == bp({1}, {1}));
    CHECK(q2[2] == bp({1, 1}, {}));
    CHECK(q2[3] == bp({}, {2}));
    CHECK(q2[4] == bp({}, {1, 1}));
}

TEST_CASE("distinguished predicates") {
    CHECK_FALSE(is_C_dist(bp({}, {2})));
    CHECK(is_special(bp({1}, {1, 1})));
    CHECK(is_B2_dist(bp({}, {2})));
    CHECK(is_P2nC(pt({2, 2})));
    CHECK(is_P2nC(pt({1, 1, 1, 1})));
    CHECK(is_P2nC(pt({2, 1, 1})));
    CHECK_FALSE(is_P2nC(pt({3, 1})));
    CHECK(is_P2n1B(pt({3, 1, 1})));
    CHECK(is_P2n1B(pt({2, 2, 1})));
    CHECK_FALSE(is_P2n1B(pt({2, 1})));

    for (int n = 0; n <= 8; ++n)
        for (const auto& b : enumerate_bipartitions(n))
            CHECK(is_special(b) == (is_B_dist(b) && is_C_dist(b)));
}

TEST_CASE("preceq") {
    CHECK(preceq(bp({1}, {2}), bp({2}, {1})));
    for (int n = 0; n <= 6; ++n)
        for (const auto& a : enumerate_bipartitions(n)) CHECK(preceq(a, a));
    // Equal sums (2,1); dominance and the componentwise route both hold.
    CHECK(preceq(bp({}, {2, 1}), bp({1}, {1, 1})));
    CHECK_FALSE(preceq(bp({1}, {1, 1}), bp({}, {2, 1})));
    CHECK_THROWS_AS(preceq(bp({1}, {}), bp({2}, {})), std::invalid_argument);
}
