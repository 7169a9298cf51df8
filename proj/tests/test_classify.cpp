#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "nilpiece/classify.hpp"

using namespace nilpiece;
using namespace nilpiece::fq;
using namespace nilpiece::cones;

namespace {
Bipartition bp(std::vector<int> mu, std::vector<int> nu) {
    return Bipartition(std::move(mu), std::move(nu));
}

FqVec fvec(const Field& F, std::vector<int> entries) {
    FqOps ops(F);
    FqVec v = ops.vzero(static_cast<int>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i)
        v.set(static_cast<int>(i + 1), static_cast<uint8_t>(entries[i]));
    return v;
}

template <class Ops>
typename Ops::Vec random_vec(const Ops& ops, std::mt19937& rng, int q, int d) {
    auto v = ops.vzero(d);
    for (int i = 1; i <= d; ++i) ops.vset(v, i, static_cast<uint8_t>(rng() % q));
    return v;
}

// Random element of sp (char 2): free entries on/above the skew diagonal.
template <class Ops>
typename Ops::Mat random_sp2(const Ops& ops, std::mt19937& rng, int q, int d) {
    auto m = ops.zero(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d + 1 - i; ++j) {
            uint8_t v = static_cast<uint8_t>(rng() % q);
            ops.set(m, i, j, v);
            ops.set(m, d + 1 - j, d + 1 - i, v);
        }
    return m;
}
}  // namespace

TEST_CASE("form conventions") {
    for (int q : {2, 4}) {
        const Field& F = Field::gf(q);
        FqOps ops(F);
        int n = 2, d = 2 * n;
        auto e = [&](int i) {
            auto v = ops.vzero(d);
            v.set(i, 1);
            return v;
        };
        CHECK(form_std(ops, F, d, e(1), e(d)) == 1);
        CHECK(form_std(ops, F, d, e(2), e(d - 1)) == 1);
        CHECK(form_std(ops, F, d, e(1), e(2)) == 0);
        std::mt19937 rng(42);
        for (int t = 0; t < 50; ++t) {
            auto v = random_vec(ops, rng, q, d);
            CHECK(form_std(ops, F, d, v, v) == 0);  // alternating in char 2
        }
        // Q~(e_0) = 1 with e_0 at coordinate 1 of V~.
        auto e0 = ops.vzero(d + 1);
        e0.set(1, 1);
        CHECK(quad_tilde(ops, F, d + 1, e0) == 1);
    }
}

TEST_CASE("membership predicates") {
    const Field& F = Field::gf(2);
    FqOps ops(F);
    int n = 2, d = 2 * n;
    CHECK(in_sp(ops, ops.zero(d)));
    CHECK(in_oV(ops, ops.zero(d)));
    CHECK(in_oVtilde(ops, ops.zero(d + 1)));

    auto e1d = ops.zero(d);  // E_{1,2n} sits on the skew diagonal
    e1d.set(1, d, 1);
    CHECK(in_sp(ops, e1d));
    CHECK_FALSE(in_oV(ops, e1d));

    auto m = ops.zero(d + 1);  // nonzero e_0 column
    m.set(2, 1, 1);
    CHECK_FALSE(in_oVtilde(ops, m));

    // Odd characteristic membership via the forms.
    const Field& F3 = Field::gf(3);
    FqOps o3(F3);
    CHECK(in_sp_odd(o3, F3, o3.zero(4)));
    CHECK(in_o_odd(o3, F3, o3.zero(5)));
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        auto x = o3.zero(4);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) x.set(i, j, static_cast<uint8_t>(rng() % 3));
        bool member = in_sp_odd(o3, F3, x);
        bool direct = true;
        for (int i = 1; i <= 4 && direct; ++i)
            for (int j = 1; j <= 4 && direct; ++j) {
                auto ei = fvec(F3, {i == 1, i == 2, i == 3, i == 4});
                auto ej = fvec(F3, {j == 1, j == 2, j == 3, j == 4});
                auto s = F3.add(form_sp_odd(o3, F3, 4, o3.apply(x, ei), ej),
                                form_sp_odd(o3, F3, 4, ei, o3.apply(x, ej)));
                if (s != 0) direct = false;
            }
        CHECK(member == direct);
    }
}

TEST_CASE("s(v) and pi") {
    const Field& F = Field::gf(2);
    FqOps ops(F);
    CHECK(ops.is_zero(s_section(ops, F, ops.vzero(4), 4)));

    // n = 1, v = e_1: the only nonzero entry is (1,2) = a_1 a_1 = 1.
    auto s = s_section(ops, F, fvec(F, {1, 0}), 2);
    CHECK(s.get(1, 2) == 1);
    s.set(1, 2, 0);
    CHECK(ops.is_zero(s));

    const Field& F4 = Field::gf(4);
    FqOps ops4(F4);
    std::mt19937 rng(99);
    for (int t = 0; t < 100; ++t) {
        auto v = random_vec(ops4, rng, 4, 6);
        auto sv = s_section(ops4, F4, v, 6);
        CHECK(in_sp(ops4, sv));
        CHECK(pi_map(ops4, F4, sv) == v);
        // s(v)w = <v,w> v
        auto w = random_vec(ops4, rng, 4, 6);
        auto lhs = ops4.apply(sv, w);
        auto c = form_std(ops4, F4, 6, v, w);
        auto rhs = ops4.vzero(6);
        for (int i = 1; i <= 6; ++i) rhs.set(i, F4.mul(c, v.get(i)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Psi and its inverse") {
    const Field& F = Field::gf(2);
    Gf2Ops ops;
    std::mt19937 rng(7);
    int n = 2, d = 2 * n;
    for (int t = 0; t < 200; ++t) {
        auto x = random_sp2(ops, rng, 2, d);
        for (int i = 1; i <= d; ++i) ops.set(x, i, d + 1 - i, 0);  // drop to o(V)
        auto v = random_vec(ops, rng, 2, d);
        if (!is_nilpotent(ops, x)) continue;
        auto y = psi(ops, F, v, x);
        CHECK(in_sp(ops, y));
        CHECK(is_nilpotent(ops, y));
        auto [v2, x2] = psi_inverse(ops, F, y);
        CHECK(v2 == v);
        CHECK(x2 == x);
    }
    // Psi(v, 0) = s(v) has Jordan type (2,1^{2n-2}) for v != 0.
    auto v = ops.vzero(d);
    ops.vset(v, 1, 1);
    CHECK(jordan_type(ops, psi(ops, F, v, ops.zero(d))) == Partition({2, 1, 1}));
    CHECK(jordan_type(ops, psi(ops, F, ops.vzero(d), ops.zero(d))) ==
          Partition({1, 1, 1, 1}));
}

TEST_CASE("Psi-tilde") {
    const Field& F = Field::gf(2);
    Gf2Ops ops;
    CHECK(ops.is_zero(psi_tilde(ops, F, ops.vzero(4), ops.zero(4))));
    std::mt19937 rng(11);
    int n = 2, d = 2 * n;
    for (int t = 0; t < 200; ++t) {
        auto x = random_sp2(ops, rng, 2, d);
        for (int i = 1; i <= d; ++i) ops.set(x, i, d + 1 - i, 0);
        auto v = random_vec(ops, rng, 2, d);
        auto y = psi_tilde(ops, F, v, x);
        CHECK(in_oVtilde(ops, y));
        CHECK(is_nilpotent(ops, y) == is_nilpotent(ops, x));
        auto [v2, x2] = psi_tilde_inverse(ops, y);
        CHECK(v2 == v);
        CHECK(x2 == x);
    }
}

TEST_CASE("char-2 classification on canonical points") {
    const Field& F = Field::gf(2);
    Gf2Ops ops;
    for (int n = 1; n <= 3; ++n) {
        Bipartition zero_label(Partition{}, Partition(std::vector<int>(n, 1)));
        CHECK(classify_sp_char2(ops, F, ops.zero(2 * n)) == zero_label);
        CHECK(classify_o_char2(ops, F, ops.zero(2 * n + 1)) == zero_label);
        CHECK(classify_exotic_char2(ops, F, ops.vzero(2 * n), ops.zero(2 * n)) == zero_label);
    }
    // n = 1: y = E_{12} = s(e_1) is regular nilpotent with chi(2) = 1.
    auto y = ops.zero(2);
    ops.set(y, 1, 2, 1);
    CHECK(classify_sp_char2(ops, F, y) == bp({1}, {}));
    auto v = ops.vzero(2);
    ops.vset(v, 1, 1);
    CHECK(classify_exotic_char2(ops, F, v, ops.zero(2)) == bp({1}, {}));
    CHECK(jordan_box_min(ops, F, v, ops.zero(2)) == 2);
    CHECK(jordan_box_min(ops, F, ops.vzero(2), ops.zero(2)) == 1);
}

TEST_CASE("odd-characteristic classification") {
    const Field& F3 = Field::gf(3);
    FqOps ops(F3);
    CHECK(classify_sp_odd(ops, F3, ops.zero(4)) == bp({}, {1, 1}));
    CHECK(classify_o_odd(ops, F3, ops.zero(5)) == bp({}, {1, 1}));
    CHECK_THROWS_AS(classify_sp_odd(ops, Field::gf(2), ops.zero(4)), std::invalid_argument);
}

TEST_CASE("form contexts dispatch to the fixed conventions") {
    const Field& F2 = Field::gf(2);
    FqOps ops(F2);
    FormContext sp_ctx{FormContext::Kind::SymplecticChar2, 2};
    FormContext ot_ctx{FormContext::Kind::OrthogonalTildeChar2, 2};
    CHECK(sp_ctx.dim() == 4);
    CHECK(ot_ctx.dim() == 5);
    auto e = [&](int d, int i) {
        FqVec v{};
        v.n = d;
        v.set(i, 1);
        return v;
    };
    CHECK(form_eval(ops, F2, sp_ctx, e(4, 1), e(4, 4)) == 1);
    CHECK(quad_eval(ops, F2, ot_ctx, e(5, 1)) == 1);  // Q~(e_0) = 1
    CHECK(form_eval(ops, F2, ot_ctx, e(5, 1), e(5, 2)) == 0);  // e_0 is radical
    const Field& F3 = Field::gf(3);
    FqOps o3(F3);
    FormContext spo_ctx{FormContext::Kind::SymplecticOdd, 2};
    CHECK(form_eval(o3, F3, spo_ctx, e(4, 1), e(4, 4)) == 1);
    CHECK(form_eval(o3, F3, spo_ctx, e(4, 4), e(4, 1)) == F3.neg(1));
    CHECK_THROWS_AS(quad_eval(o3, F3, spo_ctx, e(4, 1)), std::invalid_argument);
}

TEST_CASE("sp closure: w -> <mw,w> is additive in char 2") {
    for (int q : {2, 4, 8}) {
        const Field& F = Field::gf(q);
        FqOps ops(F);
        std::mt19937 rng(404);
        int d = 6;
        for (int t = 0; t < 100; ++t) {
            auto m = random_sp2(ops, rng, q, d);
            auto u = random_vec(ops, rng, q, d);
            auto w = random_vec(ops, rng, q, d);
            auto uw = ops.vzero(d);
            for (int i = 1; i <= d; ++i) uw.set(i, F.add(u.get(i), w.get(i)));
            auto lhs = form_std(ops, F, d, ops.apply(m, uw), uw);
            auto rhs = F.add(form_std(ops, F, d, ops.apply(m, u), u),
                             form_std(ops, F, d, ops.apply(m, w), w));
            CHECK(lhs == rhs);
        }
    }
}
