#include <catch2/catch_amalgamated.hpp>

#include "nilpiece/census.hpp"

using namespace nilpiece;
using namespace nilpiece::cones;

namespace {
long long orbit_tally(const CensusReport& rep, const Bipartition& bp) {
    for (size_t i = 0; i < rep.labels.size(); ++i)
        if (rep.labels[i] == bp) return rep.tallies[i];
    FAIL("label not present");
    return -1;
}
}  // namespace

TEST_CASE("rank-1 censuses") {
    auto ex = run_census(Cone::Exotic, 1, 2);
    CHECK(ex.all_pass());
    CHECK(ex.cone_points == 4);  // q^{2n^2}
    CHECK(orbit_tally(ex, Bipartition({1}, {})) == 3);
    CHECK(orbit_tally(ex, Bipartition({}, {1})) == 1);

    auto sp = run_census(Cone::Sp2, 1, 2);
    CHECK(sp.all_pass());
    CHECK(sp.cone_points == 4);
    CHECK(orbit_tally(sp, Bipartition({1}, {})) == 3);

    auto o2 = run_census(Cone::O2, 1, 2);
    CHECK(o2.all_pass());
    CHECK(o2.cone_points == 4);

    auto spo = run_census(Cone::SpOdd, 1, 3);
    CHECK(spo.all_pass());
    CHECK(spo.cone_points == 9);
    CHECK(orbit_tally(spo, Bipartition({1}, {})) == 8);

    auto oo = run_census(Cone::OOdd, 1, 3);
    CHECK(oo.all_pass());
    CHECK(oo.cone_points == 9);
}

TEST_CASE("rank-2 censuses at q=2") {
    for (Cone c : {Cone::Exotic, Cone::Sp2, Cone::O2}) {
        auto rep = run_census(c, 2, 2);
        INFO("cone " << cone_name(c));
        for (const auto& l : rep.lines)
            if (!l.pass)
                FAIL_CHECK(l.section << " " << to_string(l.label) << ": " << l.tally
                                     << " != " << l.expected);
        CHECK(rep.all_pass());
        CHECK(rep.space_points == 1024);
        CHECK(rep.cone_points == 256);
    }
    for (Cone c : {Cone::SpOdd, Cone::OOdd}) {
        auto rep = run_census(c, 2, 3);
        INFO("cone " << cone_name(c));
        CHECK(rep.all_pass());
        CHECK(rep.cone_points == 6561);  // 3^8
    }
}

TEST_CASE("rank-0 censuses are the single trivial identity") {
    for (Cone c : {Cone::Exotic, Cone::Sp2, Cone::O2}) {
        auto rep = run_census(c, 0, 2);
        CHECK(rep.all_pass());
        CHECK(rep.space_points == 1);
        CHECK(rep.cone_points == 1);
    }
    for (Cone c : {Cone::SpOdd, Cone::OOdd}) {
        auto rep = run_census(c, 0, 3);
        CHECK(rep.all_pass());
        CHECK(rep.cone_points == 1);
    }
}

TEST_CASE("rank-1 censuses over the extension fields") {
    // Exercises the F_8 and F_9 table arithmetic end to end.
    for (Cone c : {Cone::Exotic, Cone::Sp2, Cone::O2}) {
        auto rep = run_census(c, 1, 8);
        INFO("cone " << cone_name(c));
        CHECK(rep.all_pass());
        CHECK(rep.cone_points == 64);  // q^{2n^2}
    }
    for (Cone c : {Cone::SpOdd, Cone::OOdd}) {
        auto rep = run_census(c, 1, 9);
        INFO("cone " << cone_name(c));
        CHECK(rep.all_pass());
        CHECK(rep.cone_points == 81);
    }
}

TEST_CASE("census report invariants") {
    auto rep = run_census(Cone::Exotic, 2, 2);
    long long sum = 0;
    for (long long t : rep.tallies) sum += t;
    CHECK(sum == static_cast<long long>(rep.cone_points));
    CHECK(rep.labels.size() == enumerate_bipartitions(2).size());
    // Orbit lines come first, in label order.
    for (size_t i = 0; i < rep.labels.size(); ++i) {
        CHECK(rep.lines[i].section == "orbit");
        CHECK(rep.lines[i].label == rep.labels[i]);
    }
    CHECK(rep.lines.back().section == "total");
}

TEST_CASE("budget guard") {
    CHECK_THROWS_AS(run_census(Cone::Sp2, 3, 4), BudgetExceeded);
    try {
        run_census(Cone::Sp2, 3, 4);
    } catch (const BudgetExceeded& e) {
        CHECK(e.required == (1ull << 42));
    }
    CHECK_THROWS_AS(run_census(Cone::Sp2, 2, 3), std::invalid_argument);  // char mismatch
    CHECK_THROWS_AS(run_census(Cone::SpOdd, 2, 4), std::invalid_argument);
}

TEST_CASE("odd-characteristic decoders land in the Lie algebra") {
    using namespace nilpiece::fq;
    for (int q : {3, 5}) {
        const Field& F = Field::gf(q);
        FqOps ops(F);
        for (unsigned long long idx : {0ull, 1ull, 12345ull, 99999ull}) {
            auto sp = nilpiece::cones::detail::decode_sp_odd(ops, F, 4,
                                                             nilpiece::cones::detail::Digits{idx, q});
            CHECK(in_sp_odd(ops, F, sp));
            auto o = nilpiece::cones::detail::decode_o_odd(ops, F, 5,
                                                           nilpiece::cones::detail::Digits{idx, q});
            CHECK(in_o_odd(ops, F, o));
        }
    }
}

TEST_CASE("Psi matches the two rank-2 censuses label by label") {
    auto ex = run_census(Cone::Exotic, 2, 2);
    auto sp = run_census(Cone::Sp2, 2, 2);
    REQUIRE(ex.labels == sp.labels);
    CHECK(ex.tallies == sp.tallies);
}
