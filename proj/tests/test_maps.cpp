#include <catch2/catch_amalgamated.hpp>

#include "nilpiece/maps.hpp"

using namespace nilpiece;

namespace {
Bipartition bp(std::vector<int> mu, std::vector<int> nu) {
    return Bipartition(std::move(mu), std::move(nu));
}
Partition pt(std::vector<int> p) { return Partition(std::move(p)); }
HesselinkIndex hx(std::map<int, int> m) { return HesselinkIndex{std::move(m)}; }

// Doubled interleaved composition (2r1, 2s1, 2r2, 2s2, ...).
Composition doubled(const Bipartition& b) {
    Composition il = interleave(b);
    std::vector<int> v;
    for (int x : il.parts()) v.push_back(2 * x);
    return Composition(std::move(v));
}
}  // namespace

TEST_CASE("Phi^C table on Q_2") {
    CHECK(phi_C(bp({2}, {})) == pt({4}));
    CHECK(phi_C(bp({1}, {1})) == pt({2, 2}));
    CHECK(phi_C(bp({}, {2})) == pt({2, 2}));
    CHECK(phi_C(bp({1, 1}, {})) == pt({2, 1, 1}));
    CHECK(phi_C(bp({}, {1, 1})) == pt({1, 1, 1, 1}));
}

TEST_CASE("hat Phi^C") {
    CHECK(hat_phi_C(pt({2, 2})) == bp({1}, {1}));
    CHECK(hat_phi_C(pt({2, 1, 1})) == bp({1, 1}, {}));
    CHECK(hat_phi_C(pt({1, 1, 1, 1})) == bp({}, {1, 1}));
    CHECK_THROWS_AS(hat_phi_C(pt({3, 1})), std::invalid_argument);
    for (int n = 0; n <= 8; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            Partition lam = phi_C(b);
            CHECK(phi_C(hat_phi_C(lam)) == lam);
        }
}

TEST_CASE("collapse_C") {
    CHECK(collapse_C(bp({}, {2})) == bp({1}, {1}));
    CHECK(collapse_C(bp({1}, {1})) == bp({1}, {1}));
    CHECK(collapse_C(bp({1}, {1, 1})) == bp({1}, {1, 1}));
    for (int n = 0; n <= 8; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            Bipartition c = collapse_C(b);
            CHECK(is_C_dist(c));
            CHECK(bipartition_leq(b, c));
            CHECK((collapse_C(b) == b) == is_C_dist(b));
        }
}

TEST_CASE("Phi^B table on Q_2") {
    CHECK(phi_B(bp({2}, {})) == pt({5}));
    CHECK(phi_B(bp({1}, {1})) == pt({3, 1, 1}));
    CHECK(phi_B(bp({}, {2})) == pt({2, 2, 1}));
    CHECK(phi_B(bp({1, 1}, {})) == pt({3, 1, 1}));
    CHECK(phi_B(bp({}, {1, 1})) == pt({1, 1, 1, 1, 1}));
}

TEST_CASE("hat Phi^B") {
    CHECK(hat_phi_B(pt({3, 1, 1})) == bp({1}, {1}));
    CHECK(hat_phi_B(pt({2, 2, 1})) == bp({}, {2}));
    CHECK(hat_phi_B(pt({1, 1, 1, 1, 1})) == bp({}, {1, 1}));
    CHECK_THROWS_AS(hat_phi_B(pt({2, 1})), std::invalid_argument);
    for (int n = 0; n <= 8; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            Partition lam = phi_B(b);
            CHECK(phi_B(hat_phi_B(lam)) == lam);
        }
}

TEST_CASE("collapses onto Q_n^B, Q_n^o, Q_n^{B,2}") {
    CHECK(collapse_special(bp({}, {3})) == bp({1}, {2}));
    CHECK(collapse_special(bp({}, {2, 1})) == bp({1}, {1, 1}));
    CHECK(collapse_special(bp({1, 1, 1}, {})) == bp({1}, {1, 1}));
    CHECK(collapse_tilde(bp({}, {3})) == bp({1}, {2}));

    for (int n = 0; n <= 8; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            Bipartition cb = collapse_B(b);
            CHECK(is_B_dist(cb));
            CHECK(bipartition_leq(b, cb));
            CHECK((cb == b) == is_B_dist(b));

            Bipartition cs = collapse_special(b);
            CHECK(is_special(cs));
            CHECK(bipartition_leq(b, cs));

            Bipartition ct = collapse_tilde(b);
            CHECK(is_B2_dist(ct));
            CHECK(preceq(b, ct));
            CHECK((ct == b) == is_B2_dist(b));
            // Collapsing commutes with the tilde collapse.
            CHECK(collapse_B(ct) == cb);
            CHECK(collapse_C(ct) == collapse_C(b));
        }
}

TEST_CASE("collapse minimality by brute poset search") {
    for (int n = 0; n <= 7; ++n) {
        auto all = enumerate_bipartitions(n);
        for (const auto& b : all) {
            Bipartition cc = collapse_C(b), cb = collapse_B(b), cs = collapse_special(b),
                        ct = collapse_tilde(b);
            for (const auto& t : all) {
                if (is_C_dist(t) && bipartition_leq(b, t)) CHECK(bipartition_leq(cc, t));
                if (is_B_dist(t) && bipartition_leq(b, t)) CHECK(bipartition_leq(cb, t));
                if (is_special(t) && bipartition_leq(b, t)) CHECK(bipartition_leq(cs, t));
                if (is_B2_dist(t) && bipartition_leq(b, t)) CHECK(bipartition_leq(ct, t));
            }
        }
    }
}

TEST_CASE("order preservation and the squeeze property") {
    for (int n = 0; n <= 6; ++n) {
        auto all = enumerate_bipartitions(n);
        for (const auto& a : all)
            for (const auto& b : all)
                if (bipartition_leq(a, b)) {
                    CHECK(dominance_leq(phi_C(a).as_composition(), phi_C(b).as_composition()));
                    CHECK(dominance_leq(phi_B(a).as_composition(), phi_B(b).as_composition()));
                }
        // lambda >= doubled interleave iff lambda >= Phi^C (Prop phiC(2)).
        for (const auto& lam : enumerate_partitions(2 * n))
            for (const auto& b : all)
                CHECK(dominance_leq(doubled(b), lam.as_composition()) ==
                      dominance_leq(phi_C(b).as_composition(), lam.as_composition()));
    }
}

TEST_CASE("Phi^C restricted to Q_n^C is a poset isomorphism") {
    for (int n = 0; n <= 7; ++n) {
        auto all = enumerate_bipartitions(n);
        std::vector<Bipartition> cd;
        for (const auto& b : all)
            if (is_C_dist(b)) cd.push_back(b);
        std::vector<Bipartition> bd;
        for (const auto& b : all)
            if (is_B_dist(b)) bd.push_back(b);
        for (const auto& a : cd)
            for (const auto& b : cd)
                CHECK(bipartition_leq(a, b) ==
                      dominance_leq(phi_C(a).as_composition(), phi_C(b).as_composition()));
        for (const auto& a : bd)
            for (const auto& b : bd)
                CHECK(bipartition_leq(a, b) ==
                      dominance_leq(phi_B(a).as_composition(), phi_B(b).as_composition()));
    }
}

TEST_CASE("Phi^{B,2} table on Q_2") {
    CHECK(phi_B2(bp({2}, {})) == pt({3, 2}));
    CHECK(phi_B2(bp({1}, {1})) == pt({2, 2, 1}));
    CHECK(phi_B2(bp({}, {2})) == pt({2, 2, 1}));
    CHECK(phi_B2(bp({1, 1}, {})) == pt({2, 1, 1, 1}));
    CHECK(phi_B2(bp({}, {1, 1})) == pt({1, 1, 1, 1, 1}));
}

TEST_CASE("Hesselink indices") {
    CHECK(hesselink_C(bp({}, {2})) == hx({{2, 0}}));
    CHECK(hesselink_C(bp({1}, {1})) == hx({{2, 1}}));
    CHECK(hesselink_C(bp({2}, {})) == hx({{4, 2}}));
    for (int i = 1; i <= 4; ++i)  // chi_{empty;nu} vanishes identically
        for (const auto& nu : enumerate_partitions(i))
            for (auto [m, v] : hesselink_C(Bipartition(Partition{}, nu)).assignments)
                CHECK(v == 0);

    CHECK(hesselink_B2(bp({1}, {1})) == hx({{1, 1}, {2, 2}}));
    CHECK(hesselink_B2(bp({2}, {})) == hx({{3, 3}, {2, 2}}));
    CHECK(hesselink_B2(bp({}, {1, 1})) == hx({{1, 1}}));
    CHECK_THROWS_AS(hesselink_B2(bp({}, {3})), std::invalid_argument);
}

TEST_CASE("invert_jordan round trips") {
    CHECK(invert_jordan_C(pt({2, 2}), hx({{2, 1}})) == bp({1}, {1}));
    CHECK(invert_jordan_C(pt({2, 2}), hx({{2, 0}})) == bp({}, {2}));
    CHECK(invert_jordan_B2(pt({2, 2, 1}), hx({{1, 1}, {2, 2}})) == bp({1}, {1}));
    for (int n = 0; n <= 6; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            CHECK(invert_jordan_C(phi_C(b), hesselink_C(b)) == b);
            if (is_B2_dist(b)) CHECK(invert_jordan_B2(phi_B2(b), hesselink_B2(b)) == b);
        }
}

TEST_CASE("(Phi^{B,2}, chi-tilde) separates Q_n^{B,2}") {
    // Phi^{B,2} alone is not injective on Q_n^{B,2} (both ((1);(1)) and
    // (();(2)) map to (2,2,1)); the pair with chi-tilde is.
    CHECK(phi_B2(bp({1}, {1})) == phi_B2(bp({}, {2})));
    CHECK(is_B2_dist(bp({1}, {1})));
    CHECK(is_B2_dist(bp({}, {2})));
    for (int n = 0; n <= 7; ++n) {
        std::map<std::pair<Partition, HesselinkIndex>, Bipartition> seen;
        for (const auto& b : enumerate_bipartitions(n)) {
            if (!is_B2_dist(b)) continue;
            auto key = std::make_pair(phi_B2(b), hesselink_B2(b));
            CHECK(seen.find(key) == seen.end());
            seen.emplace(key, b);
        }
    }
}

TEST_CASE("fibers partition Q_n") {
    auto set_of = [](std::vector<Bipartition> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(set_of(fiber(PieceKind::B, bp({1}, {1, 1}), 3)) ==
          set_of({bp({1}, {1, 1}), bp({1, 1, 1}, {})}));
    CHECK(set_of(fiber(PieceKind::C, bp({1}, {1, 1}), 3)) ==
          set_of({bp({1}, {1, 1}), bp({}, {2, 1})}));
    CHECK(set_of(fiber(PieceKind::Special, bp({1}, {1, 1}), 3)) ==
          set_of({bp({1}, {1, 1}), bp({}, {2, 1}), bp({1, 1, 1}, {})}));
    CHECK_THROWS_AS(fiber(PieceKind::C, bp({}, {2}), 2), std::invalid_argument);

    for (int n = 0; n <= 6; ++n) {
        auto all = enumerate_bipartitions(n);
        for (PieceKind k :
             {PieceKind::B, PieceKind::C, PieceKind::Special, PieceKind::Tilde}) {
            size_t total = 0;
            for (const auto& t : all) {
                if (!in_sub_poset(t, k)) continue;
                for (const auto& m : fiber(k, t, n)) {
                    ++total;
                    CHECK(collapse(m, k) == t);
                }
            }
            CHECK(total == all.size());
        }
    }
}

TEST_CASE("lambda filtration dimensions") {
    CHECK(lambda_filtration_dim(pt({4}), 3) == 1);
    CHECK(lambda_filtration_dim(pt({4}), 4) == 0);
    CHECK(lambda_filtration_dim(pt({4}), 7) == 0);
    CHECK(lambda_filtration_dim(pt({4}), -3) == 4);

    CHECK(grading_dims(pt({4})) ==
          std::map<int, int>{{3, 1}, {1, 1}, {-1, 1}, {-3, 1}});
}

TEST_CASE("resolution dimension identities") {
    auto rC = resolution_dim_check(bp({2}, {}), ConeSide::C);
    CHECK(rC.flag_dim == 4);
    CHECK(rC.dim_v_part == 2);
    CHECK(rC.dim_s_ge2 == 2);
    CHECK(rC.total == 8);
    CHECK(rC.expected == 8);
    CHECK(rC.pass);

    auto rB = resolution_dim_check(bp({1}, {1, 1}), ConeSide::B);
    CHECK(rB.total == 10);
    CHECK(rB.expected == 10);
    CHECK(rB.pass);

    for (int n = 0; n <= 5; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            if (is_C_dist(b)) CHECK(resolution_dim_check(b, ConeSide::C).pass);
            if (is_B_dist(b)) CHECK(resolution_dim_check(b, ConeSide::B).pass);
        }
}
