#pragma once

// The fixed form conventions, the section s(v), the bijections Psi and
// Psi-tilde, and orbit classification for all five censuses. Matrix and
// vector coordinates are 1-based; in the (2n+1)-dimensional space V~ the
// basis vector e_0 sits at coordinate 1 and V occupies coordinates 2..2n+1.

#include <map>

#include "nilpiece/linalg.hpp"
#include "nilpiece/maps.hpp"

namespace nilpiece::cones {

using fq::Field;

// ---------------------------------------------------------------------------
// Forms. V has dimension d = 2n with <a,b> = sum_i a_i b_{d+1-i} and
// Q(a) = sum_{i<=n} a_i a_{d+1-i} in characteristic 2; the odd-characteristic
// Gram conventions are split forms on the antidiagonal.

template <class Ops>
typename Ops::Elem form_std(const Ops&, const Field& F, int d,
                            typename Ops::Vec a, typename Ops::Vec b) {
    typename Ops::Elem acc = 0;
    for (int i = 1; i <= d; ++i)
        acc = F.add(acc, F.mul(Ops::vget(a, i), Ops::vget(b, d + 1 - i)));
    return acc;
}

template <class Ops>
typename Ops::Elem quad_std(const Ops&, const Field& F, int d, typename Ops::Vec a) {
    typename Ops::Elem acc = 0;
    for (int i = 1; i <= d / 2; ++i)
        acc = F.add(acc, F.mul(Ops::vget(a, i), Ops::vget(a, d + 1 - i)));
    return acc;
}

// Q~(a e_0 + v) = a^2 + Q(v); the radical of the bilinear form is F e_0.
template <class Ops>
typename Ops::Elem quad_tilde(const Ops&, const Field& F, int d, typename Ops::Vec a) {
    typename Ops::Elem a0 = Ops::vget(a, 1);
    typename Ops::Elem acc = F.mul(a0, a0);
    int dv = d - 1;
    for (int i = 1; i <= dv / 2; ++i)
        acc = F.add(acc, F.mul(Ops::vget(a, 1 + i), Ops::vget(a, 1 + dv + 1 - i)));
    return acc;
}

template <class Ops>
typename Ops::Elem form_tilde(const Ops&, const Field& F, int d,
                              typename Ops::Vec a, typename Ops::Vec b) {
    typename Ops::Elem acc = 0;
    int dv = d - 1;
    for (int i = 1; i <= dv; ++i)
        acc = F.add(acc, F.mul(Ops::vget(a, 1 + i), Ops::vget(b, 1 + dv + 1 - i)));
    return acc;
}

// Odd characteristic: <e_i, e_{2n+1-i}> = 1 for i <= n, -1 for i > n.
template <class Ops>
typename Ops::Elem form_sp_odd(const Ops&, const Field& F, int d,
                               typename Ops::Vec a, typename Ops::Vec b) {
    typename Ops::Elem acc = 0;
    for (int i = 1; i <= d; ++i) {
        typename Ops::Elem t = F.mul(Ops::vget(a, i), Ops::vget(b, d + 1 - i));
        acc = F.add(acc, i <= d / 2 ? t : F.neg(t));
    }
    return acc;
}

// Odd characteristic, dim 2n+1: symmetric with <e_i, e_{2n+2-i}> = 1.
template <class Ops>
typename Ops::Elem form_o_odd(const Ops&, const Field& F, int d,
                              typename Ops::Vec a, typename Ops::Vec b) {
    typename Ops::Elem acc = 0;
    for (int i = 1; i <= d; ++i)
        acc = F.add(acc, F.mul(Ops::vget(a, i), Ops::vget(b, d + 1 - i)));
    return acc;
}

// The fixed form conventions bundled behind one dispatch point.
struct FormContext {
    enum class Kind { SymplecticChar2, OrthogonalTildeChar2, SymplecticOdd, OrthogonalOdd };
    Kind kind;
    int n;  // rank

    int dim() const {
        return (kind == Kind::OrthogonalTildeChar2 || kind == Kind::OrthogonalOdd) ? 2 * n + 1
                                                                                   : 2 * n;
    }
};

template <class Ops>
typename Ops::Elem form_eval(const Ops& ops, const Field& F, const FormContext& ctx,
                             typename Ops::Vec a, typename Ops::Vec b) {
    switch (ctx.kind) {
        case FormContext::Kind::SymplecticChar2: return form_std(ops, F, ctx.dim(), a, b);
        case FormContext::Kind::OrthogonalTildeChar2: return form_tilde(ops, F, ctx.dim(), a, b);
        case FormContext::Kind::SymplecticOdd: return form_sp_odd(ops, F, ctx.dim(), a, b);
        case FormContext::Kind::OrthogonalOdd: return form_o_odd(ops, F, ctx.dim(), a, b);
    }
    throw std::logic_error("bad form kind");
}

template <class Ops>
typename Ops::Elem quad_eval(const Ops& ops, const Field& F, const FormContext& ctx,
                             typename Ops::Vec a) {
    require(F.char2(), "quadratic forms are fixed only in characteristic 2");
    if (ctx.kind == FormContext::Kind::OrthogonalTildeChar2)
        return quad_tilde(ops, F, ctx.dim(), a);
    require(ctx.kind == FormContext::Kind::SymplecticChar2, "no quadratic form in this context");
    return quad_std(ops, F, ctx.dim(), a);
}

// ---------------------------------------------------------------------------
// Membership predicates

// char 2: symmetric about the skew diagonal.
template <class Ops>
bool in_sp(const Ops&, const typename Ops::Mat& m) {
    int d = Ops::dim(m);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            if (Ops::get(m, i, j) != Ops::get(m, d + 1 - j, d + 1 - i)) return false;
    return true;
}

// char 2: additionally zero on the skew diagonal.
template <class Ops>
bool in_oV(const Ops& ops, const typename Ops::Mat& m) {
    int d = Ops::dim(m);
    if (!in_sp(ops, m)) return false;
    for (int i = 1; i <= d; ++i)
        if (Ops::get(m, i, d + 1 - i) != 0) return false;
    return true;
}

// char 2, dim 2n+1: x e_0 = 0 and the V-block lies in o(V); row 1 is free.
template <class Ops>
bool in_oVtilde(const Ops&, const typename Ops::Mat& m) {
    int d = Ops::dim(m);
    if (d % 2 == 0) return false;
    for (int i = 1; i <= d; ++i)
        if (Ops::get(m, i, 1) != 0) return false;
    int dv = d - 1;
    for (int i = 1; i <= dv; ++i) {
        if (Ops::get(m, 1 + i, 1 + (dv + 1 - i)) != 0) return false;
        for (int j = 1; j <= dv; ++j)
            if (Ops::get(m, 1 + i, 1 + j) != Ops::get(m, 1 + (dv + 1 - j), 1 + (dv + 1 - i)))
                return false;
    }
    return true;
}

// Odd characteristic, form-theoretic: <mv,w> + <v,mw> = 0.
template <class Ops>
bool in_sp_odd(const Ops&, const Field& F, const typename Ops::Mat& m) {
    int d = Ops::dim(m);
    auto eps = [d](int i) { return i <= d / 2; };
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            typename Ops::Elem lhs = Ops::get(m, d + 1 - i, j);
            if (!eps(i)) lhs = F.neg(lhs);
            typename Ops::Elem rhs = Ops::get(m, d + 1 - j, i);
            if (!eps(d + 1 - j)) rhs = F.neg(rhs);
            if (lhs != F.neg(rhs)) return false;
        }
    return true;
}

template <class Ops>
bool in_o_odd(const Ops&, const Field& F, const typename Ops::Mat& m) {
    int d = Ops::dim(m);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            if (Ops::get(m, d + 1 - i, j) != F.neg(Ops::get(m, d + 1 - j, i))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The section s(v) and the bijections Psi, Psi~

// (i,j)-entry of s(sum a_i e_i) is a_i a_{2n+1-j}; s(v)w = <v,w> v.
template <class Ops>
typename Ops::Mat s_section(const Ops& ops, const Field& F, typename Ops::Vec v, int d) {
    require(F.char2(), "s(v) is a characteristic-2 construction");
    auto m = ops.zero(d);
    for (int i = 1; i <= d; ++i) {
        typename Ops::Elem ai = Ops::vget(v, i);
        if (ai == 0) continue;
        for (int j = 1; j <= d; ++j)
            ops.set(m, i, j, F.mul(ai, Ops::vget(v, d + 1 - j)));
    }
    return m;
}

// pi(x) = sum_i sqrt(x_{i, 2n+1-i}) e_i, the projection sp(V) -> V^(1).
template <class Ops>
typename Ops::Vec pi_map(const Ops& ops, const Field& F, const typename Ops::Mat& y) {
    int d = Ops::dim(y);
    auto v = ops.vzero(d);
    for (int i = 1; i <= d; ++i) ops.vset(v, i, F.sqrt2(Ops::get(y, i, d + 1 - i)));
    return v;
}

template <class Ops>
typename Ops::Mat psi(const Ops& ops, const Field& F, typename Ops::Vec v,
                      const typename Ops::Mat& x) {
    return ops.add(s_section(ops, F, v, Ops::dim(x)), x);
}

// Psi^{-1}(y) = (pi(y), y - s(pi(y))).
template <class Ops>
std::pair<typename Ops::Vec, typename Ops::Mat> psi_inverse(const Ops& ops, const Field& F,
                                                            const typename Ops::Mat& y) {
    auto v = pi_map(ops, F, y);
    return {v, ops.add(y, s_section(ops, F, v, Ops::dim(y)))};
}

// Psi~(v,x) in o(V~): zero e_0 column, top row delta(v), x embedded.
template <class Ops>
typename Ops::Mat psi_tilde(const Ops& ops, const Field& F, typename Ops::Vec v,
                            const typename Ops::Mat& x) {
    require(F.char2(), "Psi~ is a characteristic-2 construction");
    int dv = Ops::dim(x);
    auto m = ops.zero(dv + 1);
    for (int i = 1; i <= dv; ++i) ops.set(m, 1, 1 + i, Ops::vget(v, dv + 1 - i));
    for (int i = 1; i <= dv; ++i)
        for (int j = 1; j <= dv; ++j) ops.set(m, 1 + i, 1 + j, Ops::get(x, i, j));
    return m;
}

template <class Ops>
std::pair<typename Ops::Vec, typename Ops::Mat> psi_tilde_inverse(const Ops& ops,
                                                                  const typename Ops::Mat& y) {
    int dv = Ops::dim(y) - 1;
    auto v = ops.vzero(dv);
    for (int i = 1; i <= dv; ++i) ops.vset(v, dv + 1 - i, Ops::get(y, 1, 1 + i));
    auto x = ops.zero(dv);
    for (int i = 1; i <= dv; ++i)
        for (int j = 1; j <= dv; ++j) ops.set(x, i, j, Ops::get(y, 1 + i, 1 + j));
    return {v, x};
}

// ---------------------------------------------------------------------------
// Hesselink minima

namespace detail {

template <class Ops>
const typename Ops::Mat& power_or_zero(const Ops&,
                                       const std::vector<typename Ops::Mat>& chain, int k,
                                       const typename Ops::Mat& zero) {
    return k < static_cast<int>(chain.size()) ? chain[k] : zero;
}

}  // namespace detail

// min{ j >= 0 | <y^{2j+1} w, w> = 0 for all w in ker(y^m) }. The map
// w -> <y^{2j+1} w, w> is additive for y in sp(V) in characteristic 2
// (the cross terms <y^a u, w> and <y^a w, u> coincide because y is
// self-adjoint and the form is symmetric), so checking a kernel basis
// suffices.
template <class Ops>
int chi_C_min(const Ops& ops, const Field& F, const std::vector<typename Ops::Mat>& chain,
              int m, int dim) {
    auto zero = ops.zero(dim);
    auto kernel = ops.kernel_basis(detail::power_or_zero(ops, chain, m, zero));
    for (int j = 0; j <= m; ++j) {
        const auto& yp = detail::power_or_zero(ops, chain, 2 * j + 1, zero);
        bool ok = true;
        for (const auto& w : kernel)
            if (form_std(ops, F, dim, ops.apply(yp, w), w) != 0) {
                ok = false;
                break;
            }
        if (ok) return j;
    }
    throw std::logic_error("chi_C minimum exceeded the part value");
}

// min{ j >= 0 | Q~(y^j w) = 0 for all w in ker(y^m) }. Vanishing of the
// quadratic form on a subspace is checked on a basis plus the polarization
// <y^j u, y^j w> on basis pairs (Q(u+w) = Q(u) + Q(w) + <u,w>).
template <class Ops>
int chi_B2_min(const Ops& ops, const Field& F, const std::vector<typename Ops::Mat>& chain,
               int m, int dim) {
    auto zero = ops.zero(dim);
    auto kernel = ops.kernel_basis(detail::power_or_zero(ops, chain, m, zero));
    std::vector<typename Ops::Vec> img(kernel.size());
    for (int j = 0; j <= m; ++j) {
        const auto& yp = detail::power_or_zero(ops, chain, j, zero);
        for (size_t r = 0; r < kernel.size(); ++r) img[r] = ops.apply(yp, kernel[r]);
        bool ok = true;
        for (size_t r = 0; r < kernel.size() && ok; ++r) {
            if (quad_tilde(ops, F, dim, img[r]) != 0) ok = false;
            for (size_t s = r + 1; s < kernel.size() && ok; ++s)
                if (form_tilde(ops, F, dim, img[r], img[s]) != 0) ok = false;
        }
        if (ok) return j;
    }
    throw std::logic_error("chi_B2 minimum exceeded the part value");
}

// ---------------------------------------------------------------------------
// Classification tables: (Jordan type, Hesselink data) -> label index

inline std::vector<int> classification_key(const Partition& lam, const HesselinkIndex& chi) {
    std::vector<int> key = lam.parts();
    key.push_back(-1);
    for (auto it = chi.assignments.rbegin(); it != chi.assignments.rend(); ++it)
        key.push_back(it->second);
    return key;
}

struct ClassificationTable {
    std::vector<Bipartition> labels;                // deterministic census order
    std::map<std::vector<int>, int> key_to_label;   // classification key -> index

    int lookup(const Partition& lam, const HesselinkIndex& chi) const {
        auto it = key_to_label.find(classification_key(lam, chi));
        check(it != key_to_label.end(), "classification outside the theorem's range");
        return it->second;
    }
};

// All of Q_n, keyed by (Phi^C, chi).
inline ClassificationTable class_table_C2(int n) {
    ClassificationTable t;
    t.labels = enumerate_bipartitions(n);
    for (int i = 0; i < static_cast<int>(t.labels.size()); ++i) {
        auto key = classification_key(phi_C(t.labels[i]), hesselink_C(t.labels[i]));
        check(t.key_to_label.emplace(key, i).second, "duplicate type-C classification key");
    }
    return t;
}

// Q_n^{B,2}, keyed by (Phi^{B,2}, chi~).
inline ClassificationTable class_table_B2(int n) {
    ClassificationTable t;
    for (const Bipartition& bp : enumerate_bipartitions(n))
        if (is_B2_dist(bp)) t.labels.push_back(bp);
    for (int i = 0; i < static_cast<int>(t.labels.size()); ++i) {
        auto key = classification_key(phi_B2(t.labels[i]), hesselink_B2(t.labels[i]));
        check(t.key_to_label.emplace(key, i).second, "duplicate type-(B,2) classification key");
    }
    return t;
}

// ---------------------------------------------------------------------------
// Classifiers. The table variants return a label index for census loops; the
// plain variants return the bipartition.

template <class Ops>
int classify_sp_char2_id(const Ops& ops, const Field& F, const typename Ops::Mat& y,
                         const ClassificationTable& table) {
    auto chain = fq::power_chain(ops, y);
    check(ops.is_zero(chain.back()), "classify_sp_char2 needs a nilpotent matrix");
    Partition lam = fq::jordan_type_from_chain(ops, chain);
    HesselinkIndex chi;
    std::set<int> parts(lam.parts().begin(), lam.parts().end());
    for (int m : parts) chi.assignments[m] = chi_C_min(ops, F, chain, m, Ops::dim(y));
    return table.lookup(lam, chi);
}

template <class Ops>
int classify_o_char2_id(const Ops& ops, const Field& F, const typename Ops::Mat& y,
                        const ClassificationTable& table) {
    auto chain = fq::power_chain(ops, y);
    check(ops.is_zero(chain.back()), "classify_o_char2 needs a nilpotent matrix");
    Partition lam = fq::jordan_type_from_chain(ops, chain);
    HesselinkIndex chi;
    std::set<int> parts(lam.parts().begin(), lam.parts().end());
    for (int m : parts) chi.assignments[m] = chi_B2_min(ops, F, chain, m, Ops::dim(y));
    return table.lookup(lam, chi);
}

template <class Ops>
Bipartition classify_sp_char2(const Ops& ops, const Field& F, const typename Ops::Mat& y) {
    require(F.char2(), "classify_sp_char2 runs in characteristic 2");
    require(in_sp(ops, y), "classify_sp_char2 needs an element of sp(V)");
    auto table = class_table_C2(Ops::dim(y) / 2);
    return table.labels[classify_sp_char2_id(ops, F, y, table)];
}

template <class Ops>
Bipartition classify_o_char2(const Ops& ops, const Field& F, const typename Ops::Mat& y) {
    require(F.char2(), "classify_o_char2 runs in characteristic 2");
    require(in_oVtilde(ops, y), "classify_o_char2 needs an element of o(V~)");
    auto table = class_table_B2((Ops::dim(y) - 1) / 2);
    return table.labels[classify_o_char2_id(ops, F, y, table)];
}

// Exotic classification through Psi, with the Jordan-type cross-assertion
// from the enhanced-orbit description.
template <class Ops>
Bipartition classify_exotic_char2(const Ops& ops, const Field& F, typename Ops::Vec v,
                                  const typename Ops::Mat& x) {
    require(F.char2(), "classify_exotic_char2 runs in characteristic 2");
    require(in_oV(ops, x), "exotic points need x in o(V)");
    Bipartition bp = classify_sp_char2(ops, F, psi(ops, F, v, x));
    check(fq::jordan_type(ops, x) == duplicate(add_parts(bp.mu, bp.nu)),
          "exotic label disagrees with the Jordan type of x");
    return bp;
}

// Odd characteristic: the Jordan type alone classifies.
template <class Ops>
Bipartition classify_sp_odd(const Ops& ops, const Field& F, const typename Ops::Mat& y) {
    require(!F.char2(), "classify_sp_odd runs in odd characteristic");
    Partition lam = fq::jordan_type(ops, y);
    check(is_P2nC(lam), "symplectic Jordan type outside P_{2n}^C");
    return hat_phi_C(lam);
}

template <class Ops>
Bipartition classify_o_odd(const Ops& ops, const Field& F, const typename Ops::Mat& y) {
    require(!F.char2(), "classify_o_odd runs in odd characteristic");
    Partition lam = fq::jordan_type(ops, y);
    check(is_P2n1B(lam), "orthogonal Jordan type outside P_{2n+1}^B");
    return hat_phi_B(lam);
}

// ---------------------------------------------------------------------------
// Bundle membership conditions and the box-column minimum

// (v,x) in E_{mu;nu}: x of Jordan type (mu+nu) cup (mu+nu) and
// <v, x^{mu_i} u> = 0 for all u in ker(x^{mu_i+nu_i}); linear in u, so a
// kernel basis check suffices.
template <class Ops>
bool e_membership(const Ops& ops, const Field& F, typename Ops::Vec v,
                  const typename Ops::Mat& x, const Bipartition& target) {
    int d = Ops::dim(x);
    Partition sum = add_parts(target.mu, target.nu);
    if (fq::jordan_type(ops, x) != duplicate(sum)) return false;
    auto chain = fq::power_chain(ops, x);
    auto zero = ops.zero(d);
    for (int i = 1; i <= sum.size(); ++i) {
        const auto& pm = detail::power_or_zero(ops, chain, sum.at(i), zero);
        const auto& pmu = detail::power_or_zero(ops, chain, target.mu.at(i), zero);
        for (const auto& u : ops.kernel_basis(pm))
            if (form_std(ops, F, d, v, ops.apply(pmu, u)) != 0) return false;
    }
    return true;
}

// (v,x) in Psi~^{-1}(script-E_{mu;nu}): as above but with the twisted
// condition <v, x^{mu_i} u> = Q(x^{mu_i+1} u)^{1/2}. The defect
// u -> <v, x^{mu_i} u> + Q(x^{mu_i+1} u)^{1/2} is additive on the kernel
// because <x^{mu_i+1} u, x^{mu_i+1} u'> = <x^{2 mu_i + 2} u, u'> vanishes
// there whenever mu_i >= nu_i - 2, which the B2-distinguished target
// guarantees; the square root is additive in characteristic 2.
template <class Ops>
bool script_e_membership(const Ops& ops, const Field& F, typename Ops::Vec v,
                         const typename Ops::Mat& x, const Bipartition& target) {
    require(F.char2(), "script-E membership runs in characteristic 2");
    require(is_B2_dist(target), "script-E pieces are indexed by Q_n^{B,2}");
    int d = Ops::dim(x);
    Partition sum = add_parts(target.mu, target.nu);
    if (fq::jordan_type(ops, x) != duplicate(sum)) return false;
    auto chain = fq::power_chain(ops, x);
    auto zero = ops.zero(d);
    for (int i = 1; i <= sum.size(); ++i) {
        const auto& pm = detail::power_or_zero(ops, chain, sum.at(i), zero);
        const auto& pmu = detail::power_or_zero(ops, chain, target.mu.at(i), zero);
        const auto& pmu1 = detail::power_or_zero(ops, chain, target.mu.at(i) + 1, zero);
        for (const auto& u : ops.kernel_basis(pm)) {
            auto lhs = form_std(ops, F, d, v, ops.apply(pmu, u));
            auto rhs = F.sqrt2(quad_std(ops, F, d, ops.apply(pmu1, u)));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

// min{ j >= 1 | <v, x^{j-1}(ker x^j)> = 0 }, the column of the box added by
// Psi~; equals rho_{l(sigma)+1} + 1 on the orbit labelled (rho;sigma).
template <class Ops>
int jordan_box_min(const Ops& ops, const Field& F, typename Ops::Vec v,
                   const typename Ops::Mat& x) {
    int d = Ops::dim(x);
    auto chain = fq::power_chain(ops, x);
    auto zero = ops.zero(d);
    for (int j = 1; j <= d + 1; ++j) {
        const auto& pj = detail::power_or_zero(ops, chain, j, zero);
        const auto& pj1 = detail::power_or_zero(ops, chain, j - 1, zero);
        bool ok = true;
        for (const auto& u : ops.kernel_basis(pj))
            if (form_std(ops, F, d, v, ops.apply(pj1, u)) != 0) {
                ok = false;
                break;
            }
        if (ok) return j;
    }
    throw std::logic_error("box-column minimum not found");
}

}  // namespace nilpiece::cones
