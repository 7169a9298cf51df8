#pragma once

// Exact integer polynomial arithmetic and the point-count formulas. Ratios
// are computed in the auxiliary variable u = t^{-2} and converted to honest
// t-polynomials once, at the end; every division must be exact.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nilpiece/maps.hpp"
#include "nilpiece/partitions.hpp"

namespace nilpiece {

class IntPolynomial {
public:
    IntPolynomial() = default;
    static IntPolynomial constant(long long c) {
        IntPolynomial p;
        if (c != 0) p.c_ = {c};
        return p;
    }
    static IntPolynomial monomial(long long c, int e) {
        IntPolynomial p;
        if (c != 0) {
            p.c_.assign(e + 1, 0);
            p.c_[e] = c;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    long long coeff(int e) const {
        return (e >= 0 && e < static_cast<int>(c_.size())) ? c_[e] : 0;
    }
    long long leading_coeff() const { return c_.empty() ? 0 : c_.back(); }

    // Nonzero coefficients, exponent -> value.
    std::map<int, long long> coeffs() const {
        std::map<int, long long> m;
        for (int e = 0; e < static_cast<int>(c_.size()); ++e)
            if (c_[e] != 0) m[e] = c_[e];
        return m;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        IntPolynomial r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
    IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    // Long division with exactness enforced; the denominators arising here
    // are monic up to sign, so each step stays integral.
    friend IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
        check(!den.is_zero(), "division by the zero polynomial");
        IntPolynomial r = num, q;
        if (num.degree() >= den.degree())
            q.c_.assign(num.degree() - den.degree() + 1, 0);
        while (!r.is_zero() && r.degree() >= den.degree()) {
            check(r.leading_coeff() % den.leading_coeff() == 0, "inexact polynomial division");
            long long f = r.leading_coeff() / den.leading_coeff();
            int shift = r.degree() - den.degree();
            q.c_[shift] = f;
            for (int i = 0; i <= den.degree(); ++i) r.c_[i + shift] -= f * den.c_[i];
            r.trim();
        }
        check(r.is_zero(), "inexact polynomial division");
        q.trim();
        return q;
    }

    long long eval(long long x) const {
        __int128 acc = 0;
        for (int e = degree(); e >= 0; --e) {
            acc = acc * x + c_[e];
            check(acc <= INT64_MAX && acc >= INT64_MIN, "evaluation overflows 64 bits");
        }
        return static_cast<long long>(acc);
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (int e = degree(); e >= 0; --e) {
            long long c = c_[e];
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            long long a = c < 0 ? -c : c;
            if (a != 1 || e == 0) s += std::to_string(a);
            if (e >= 1) {
                if (a != 1) s += "*";
                s += var;
                if (e >= 2) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_;  // c_[e] is the coefficient of x^e
};

// Polynomials in the auxiliary variable u = t^{-2}; same representation, but
// kept notionally separate so Laurent bookkeeping stays out of the results.
using AuxPolynomialU = IntPolynomial;

inline long long evaluate(const IntPolynomial& p, long long q) { return p.eval(q); }

// prod_{i=1}^{k} (1 - u^i), as a polynomial in u; empty product for k = 0.
inline AuxPolynomialU poincare_product(int k) {
    require(k >= 0, "poincare_product needs k >= 0");
    AuxPolynomialU p = IntPolynomial::constant(1);
    for (int i = 1; i <= k; ++i)
        p *= IntPolynomial::constant(1) - IntPolynomial::monomial(1, i);
    return p;
}

// Converts a u-polynomial N into t^{t_power} * N(t^{-2}); the t-power must
// dominate every u-shift so that no negative exponents survive.
inline IntPolynomial u_to_t(const AuxPolynomialU& n_u, int t_power) {
    IntPolynomial out;
    check(t_power - 2 * n_u.degree() >= 0, "u-shift exceeds the leading t-power");
    for (auto [e, c] : n_u.coeffs()) out += IntPolynomial::monomial(c, t_power - 2 * e);
    return out;
}

// J(mu;nu): the set of a admitting i with mu_i+nu_i = a, mu_{i+1} < mu_i and
// j with mu_j+nu_j = a, nu_{j-1} > nu_j (nu_0 read as infinity).
inline std::set<int> j_set(const Bipartition& bp) {
    std::set<int> out;
    int len = std::max(bp.mu.size(), bp.nu.size());
    for (int a = 1; a <= bp.mu.at(1) + bp.nu.at(1); ++a) {
        bool mu_drop = false, nu_drop = false;
        for (int i = 1; i <= len; ++i) {
            if (bp.mu.at(i) + bp.nu.at(i) != a) continue;
            if (bp.mu.at(i + 1) < bp.mu.at(i)) mu_drop = true;
            if (i == 1 || bp.nu.at(i - 1) > bp.nu.at(i)) nu_drop = true;
        }
        if (mu_drop && nu_drop) out.insert(a);
    }
    return out;
}

// |O_{mu;nu}(F_q)| as an exact polynomial. The quotient is a
// polynomial in t^2 with leading coefficient 1 and degree 2(n^2 - b).
inline IntPolynomial exotic_point_poly(const Bipartition& bp) {
    int n = bp.weight();
    int t_power = 2 * (n * n - b_stat(bp));
    Partition sum = add_parts(bp.mu, bp.nu);
    std::set<int> J = j_set(bp);
    IntPolynomial den = IntPolynomial::constant(1);
    std::set<int> parts(sum.parts().begin(), sum.parts().end());
    for (int a : parts)
        den *= poincare_product(multiplicity(sum, a) - (J.count(a) ? 1 : 0));
    IntPolynomial quotient = divide_exact(poincare_product(n), den);
    check(quotient.coeff(0) == 1, "point-count polynomial must be monic");
    return u_to_t(quotient, t_power);
}

// |O^C_{mu;nu}(F_q)| via the explicit product formula, for C-distinguished
// labels; f_a = floor(m_a(Phi^C)/2).
inline IntPolynomial typeC_point_poly(const Bipartition& bp) {
    require(is_C_dist(bp), "typeC_point_poly needs a C-distinguished bipartition");
    int n = bp.weight();
    int t_power = 2 * (n * n - b_stat(bp));
    Partition lam = phi_C(bp);
    IntPolynomial den = IntPolynomial::constant(1);
    std::set<int> parts(lam.parts().begin(), lam.parts().end());
    for (int a : parts) den *= poincare_product(multiplicity(lam, a) / 2);
    IntPolynomial quotient = divide_exact(poincare_product(n), den);
    check(quotient.coeff(0) == 1, "point-count polynomial must be monic");
    return u_to_t(quotient, t_power);
}

enum class PiecePoly { Orbit, B, C, Special, Tilde, E, ScriptE };

// Point count of a piece: the sum of exotic orbit polynomials over the fiber
// of the matching collapse (kinds B/C/Special/Tilde), or over the preceq
// down-set (kinds E and ScriptE, which agree).
inline IntPolynomial piece_poly(PiecePoly kind, const Bipartition& target) {
    int n = target.weight();
    if (kind == PiecePoly::Orbit) return exotic_point_poly(target);
    if (kind == PiecePoly::E || kind == PiecePoly::ScriptE) {
        if (kind == PiecePoly::ScriptE)
            require(is_B2_dist(target), "script-E pieces are indexed by Q_n^{B,2}");
        IntPolynomial total;
        for (const Bipartition& bp : enumerate_bipartitions(n))
            if (preceq(bp, target)) total += exotic_point_poly(bp);
        return total;
    }
    PieceKind pk;
    switch (kind) {
        case PiecePoly::B: pk = PieceKind::B; break;
        case PiecePoly::C: pk = PieceKind::C; break;
        case PiecePoly::Special: pk = PieceKind::Special; break;
        default: pk = PieceKind::Tilde; break;
    }
    IntPolynomial total;
    for (const Bipartition& bp : fiber(pk, target, n)) total += exotic_point_poly(bp);
    return total;
}

// |O^B_{mu;nu}(F_q)| for B-distinguished labels, defined as the type-B piece
// sum; no closed form is used.
inline IntPolynomial typeB_point_poly(const Bipartition& bp) {
    require(is_B_dist(bp), "typeB_point_poly needs a B-distinguished bipartition");
    return piece_poly(PiecePoly::B, bp);
}

// ---------------------------------------------------------------------------
// Identity verification

struct IdentityReport {
    int n = 0;
    int checked = 0;
    std::vector<std::string> failures;
    bool all_pass() const { return failures.empty(); }
};

// Checks, over all labels of weight n: the type-C piece identity, the special
// triple equality, the degree law, and the two global sum identities. The
// tamper argument corrupts one orbit polynomial so harnesses can exercise the
// failure path; real verification passes none.
inline IdentityReport verify_identities(int n,
                                        const std::optional<Bipartition>& tamper = {}) {
    require(n >= 0, "n must be nonnegative");
    IdentityReport rep;
    rep.n = n;
    auto all = enumerate_bipartitions(n);

    IntPolynomial exotic_total, typeC_total;
    for (const Bipartition& bp : all) {
        IntPolynomial p = exotic_point_poly(bp);
        if (tamper && *tamper == bp) p += IntPolynomial::constant(1);
        exotic_total += p;
        ++rep.checked;
        int want_deg = 2 * (n * n - b_stat(bp));
        if (p.degree() != want_deg || p.leading_coeff() != 1)
            rep.failures.push_back("degree law fails for orbit " + to_string(bp));
        for (auto [e, c] : p.coeffs())
            if (e % 2 != 0)
                rep.failures.push_back("odd exponent in orbit polynomial " + to_string(bp));
    }

    for (const Bipartition& bp : all) {
        if (!is_C_dist(bp)) continue;
        ++rep.checked;
        IntPolynomial lhs = piece_poly(PiecePoly::C, bp);
        IntPolynomial rhs = typeC_point_poly(bp);
        typeC_total += rhs;
        if (lhs != rhs)
            rep.failures.push_back("type-C piece sum differs from closed form at " +
                                   to_string(bp) + ": " + lhs.str() + " vs " + rhs.str());
    }

    for (const Bipartition& bp : all) {
        if (!is_special(bp)) continue;
        ++rep.checked;
        IntPolynomial via_B, via_C;
        for (const Bipartition& rs : all) {
            if (collapse_special(rs) != bp) continue;
            if (is_B_dist(rs)) via_B += typeB_point_poly(rs);
            if (is_C_dist(rs)) via_C += typeC_point_poly(rs);
        }
        IntPolynomial direct = piece_poly(PiecePoly::Special, bp);
        if (via_B != direct || direct != via_C)
            rep.failures.push_back("special piece triple equality fails at " + to_string(bp));
    }

    ++rep.checked;
    if (exotic_total != typeC_total)
        rep.failures.push_back("sum over all orbits differs from sum over type-C pieces");
    if (exotic_total != IntPolynomial::monomial(1, 2 * n * n))
        rep.failures.push_back("total point count is not t^(2n^2)");
    return rep;
}

}  // namespace nilpiece
