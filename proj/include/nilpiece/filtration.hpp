#pragma once

// Lambda-filtrations of symplectic spaces and their recursive construction
// from the W-subspaces. The recursion passes to W^perp/W, so everything here
// works over an explicit Gram matrix rather than the fixed coordinate form.

#include "nilpiece/classify.hpp"

namespace nilpiece::cones {

using fq::FqMat;
using fq::FqOps;
using fq::FqVec;

struct BilinearSpace {
    const Field* F = nullptr;
    int dim = 0;
    FqMat gram;  // alternating (char 2: symmetric with zero diagonal)

    uint8_t form(const FqVec& a, const FqVec& b) const {
        uint8_t acc = 0;
        for (int i = 1; i <= dim; ++i) {
            if (a.get(i) == 0) continue;
            uint8_t row = 0;
            for (int j = 1; j <= dim; ++j)
                row = F->add(row, F->mul(gram.get(i, j), b.get(j)));
            acc = F->add(acc, F->mul(a.get(i), row));
        }
        return acc;
    }
};

// The standard 2n-dimensional space: <e_i, e_{2n+1-i}> = 1 (char 2) or the
// split +/- pattern (odd characteristic).
inline BilinearSpace standard_symplectic_space(const Field& F, int n) {
    BilinearSpace sp;
    sp.F = &F;
    sp.dim = 2 * n;
    sp.gram.n = 2 * n;
    for (int i = 1; i <= 2 * n; ++i) {
        uint8_t one = 1;
        if (!F.char2() && i > n) one = F.neg(1);
        sp.gram.set(i, 2 * n + 1 - i, one);
    }
    return sp;
}

// ---------------------------------------------------------------------------
// Subspaces as reduced row echelon bases

struct Subspace {
    int ambient = 0;
    std::vector<FqVec> basis;  // RREF rows, pivot columns strictly increasing
    int dim() const { return static_cast<int>(basis.size()); }
    friend bool operator==(const Subspace&, const Subspace&) = default;
};

inline Subspace rref_span(const Field& F, int ambient, std::vector<FqVec> rows) {
    std::vector<FqVec> basis;
    for (FqVec v : rows) {
        for (const FqVec& b : basis) {
            int piv = 0;
            for (int i = 1; i <= ambient; ++i)
                if (b.get(i) != 0) {
                    piv = i;
                    break;
                }
            uint8_t c = v.get(piv);
            if (c != 0)
                for (int i = 1; i <= ambient; ++i)
                    v.set(i, F.sub(v.get(i), F.mul(c, b.get(i))));
        }
        int piv = 0;
        for (int i = 1; i <= ambient; ++i)
            if (v.get(i) != 0) {
                piv = i;
                break;
            }
        if (!piv) continue;
        uint8_t ip = F.inv(v.get(piv));
        for (int i = 1; i <= ambient; ++i) v.set(i, F.mul(ip, v.get(i)));
        // back-substitute into the existing rows
        for (FqVec& b : basis) {
            uint8_t c = b.get(piv);
            if (c != 0)
                for (int i = 1; i <= ambient; ++i)
                    b.set(i, F.sub(b.get(i), F.mul(c, v.get(i))));
        }
        basis.push_back(v);
    }
    auto pivot_of = [ambient](const FqVec& v) {
        for (int i = 1; i <= ambient; ++i)
            if (v.get(i) != 0) return i;
        return ambient + 1;
    };
    std::sort(basis.begin(), basis.end(),
              [&](const FqVec& a, const FqVec& b) { return pivot_of(a) < pivot_of(b); });
    Subspace s;
    s.ambient = ambient;
    s.basis = std::move(basis);
    return s;
}

inline bool member(const Field& F, const Subspace& s, FqVec v) {
    for (const FqVec& b : s.basis) {
        int piv = 0;
        for (int i = 1; i <= s.ambient; ++i)
            if (b.get(i) != 0) {
                piv = i;
                break;
            }
        uint8_t c = v.get(piv);
        if (c != 0)
            for (int i = 1; i <= s.ambient; ++i) v.set(i, F.sub(v.get(i), F.mul(c, b.get(i))));
    }
    for (int i = 1; i <= s.ambient; ++i)
        if (v.get(i) != 0) return false;
    return true;
}

inline bool contains(const Field& F, const Subspace& outer, const Subspace& inner) {
    for (const FqVec& b : inner.basis)
        if (!member(F, outer, b)) return false;
    return true;
}

inline Subspace full_space(const Field& F, int ambient) {
    std::vector<FqVec> rows;
    for (int i = 1; i <= ambient; ++i) {
        FqVec v{};
        v.n = ambient;
        v.set(i, 1);
        rows.push_back(v);
    }
    return rref_span(F, ambient, std::move(rows));
}

// Perpendicular subspace: kernel of (basis * gram).
inline Subspace perp(const BilinearSpace& space, const Subspace& s) {
    FqOps ops(*space.F);
    FqMat m = ops.zero(space.dim);
    for (int r = 0; r < s.dim(); ++r)
        for (int j = 1; j <= space.dim; ++j) {
            uint8_t acc = 0;
            for (int i = 1; i <= space.dim; ++i)
                acc = space.F->add(acc, space.F->mul(s.basis[r].get(i), space.gram.get(i, j)));
            m.set(r + 1, j, acc);
        }
    return rref_span(*space.F, space.dim, ops.kernel_basis(m));
}

inline Subspace image_subspace(const Field& F, const FqMat& x) {
    FqOps ops(F);
    std::vector<FqVec> cols;
    for (int j = 1; j <= x.n; ++j) {
        FqVec v{};
        v.n = x.n;
        for (int i = 1; i <= x.n; ++i) v.set(i, x.get(i, j));
        cols.push_back(v);
    }
    return rref_span(F, x.n, std::move(cols));
}

// ---------------------------------------------------------------------------
// The W-subspaces that drive the filtration recursion

inline Partition drop_largest_parts(const Partition& lam) {
    std::vector<int> parts;
    int top = lam.at(1);
    for (int p : lam.parts()) parts.push_back(p == top ? top - 2 : p);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(Composition(std::move(parts)));
}

// W^lambda_{(v,x)}: the image of x^{lambda_1 - 1}, plus the line through
// x^{lambda_1/2 - 1} v when the parity rule calls for it (even lambda_1 on
// the C side, odd on the B side).
inline Subspace w_subspace(const BilinearSpace& space, const FqVec& v, const FqMat& x,
                           const Partition& lam, ConeSide side) {
    require(lam.at(1) >= 2, "W-subspace needs lambda_1 >= 2");
    const Field& F = *space.F;
    FqOps ops(F);
    int top = lam.at(1);
    std::vector<FqVec> gens;
    {
        FqMat p = matrix_power(ops, x, top - 1);
        for (int j = 1; j <= x.n; ++j) {
            FqVec col{};
            col.n = x.n;
            for (int i = 1; i <= x.n; ++i) col.set(i, p.get(i, j));
            gens.push_back(col);
        }
    }
    bool with_v = (side == ConeSide::C) ? (top % 2 == 0) : (top % 2 == 1);
    if (with_v) gens.push_back(ops.apply(matrix_power(ops, x, top / 2 - 1), v));
    Subspace w = rref_span(F, space.dim, std::move(gens));

    check(w.dim() == multiplicity(lam, top), "W-subspace dimension equals k(lambda)");
    for (const FqVec& a : w.basis) {
        check(ops.vis_zero(ops.apply(x, a)), "W-subspace lies in ker x");
        for (const FqVec& b : w.basis)
            check(space.form(a, b) == 0, "W-subspace is isotropic");
    }
    return w;
}

inline Subspace w_subspace_C(const BilinearSpace& space, const FqVec& v, const FqMat& x,
                             const Partition& lam) {
    return w_subspace(space, v, x, lam, ConeSide::C);
}
inline Subspace w_subspace_B(const BilinearSpace& space, const FqVec& v, const FqMat& x,
                             const Partition& lam) {
    return w_subspace(space, v, x, lam, ConeSide::B);
}

// ---------------------------------------------------------------------------
// Quotients W^perp / W

struct Quotient {
    BilinearSpace space;        // the quotient, with induced Gram
    Subspace w;                 // W, in ambient coordinates
    Subspace wperp;             // W^perp
    std::vector<FqVec> lift;    // complement basis: W + span(lift) = W^perp

    // Coordinates of u in the lift basis, modulo W; u must lie in W^perp.
    // The rows {W basis, lift} have pairwise distinct leading positions, so
    // eliminating the leading coordinate of u left to right is an exact
    // triangular solve.
    FqVec project(const Field& F, FqVec u) const {
        FqVec coords{};
        coords.n = space.dim;
        auto pivot_of = [this](const FqVec& v) {
            for (int i = 1; i <= w.ambient; ++i)
                if (v.get(i) != 0) return i;
            return 0;
        };
        for (int i = 1; i <= w.ambient; ++i) {
            if (u.get(i) == 0) continue;
            const FqVec* row = nullptr;
            int lift_index = -1;
            for (const FqVec& b : w.basis)
                if (pivot_of(b) == i) row = &b;
            for (size_t r = 0; r < lift.size() && !row; ++r)
                if (pivot_of(lift[r]) == i) {
                    row = &lift[r];
                    lift_index = static_cast<int>(r);
                }
            check(row != nullptr, "vector outside W^perp in quotient projection");
            uint8_t c = F.mul(u.get(i), F.inv(row->get(i)));
            if (lift_index >= 0) coords.set(lift_index + 1, c);
            for (int k = i; k <= w.ambient; ++k)
                u.set(k, F.sub(u.get(k), F.mul(c, row->get(k))));
        }
        return coords;
    }

    FqVec unproject(const Field& F, const FqVec& coords) const {
        FqVec u{};
        u.n = w.ambient;
        for (size_t r = 0; r < lift.size(); ++r) {
            uint8_t c = coords.get(static_cast<int>(r) + 1);
            if (c == 0) continue;
            for (int i = 1; i <= w.ambient; ++i)
                u.set(i, F.add(u.get(i), F.mul(c, lift[r].get(i))));
        }
        return u;
    }
};

inline Quotient make_quotient(const BilinearSpace& space, const Subspace& w) {
    const Field& F = *space.F;
    Quotient q;
    q.w = w;
    q.wperp = perp(space, w);
    check(contains(F, q.wperp, w), "W must be isotropic inside W^perp");
    // Lift basis: W^perp RREF rows whose pivots are not pivots of W.
    auto pivot_of = [&](const FqVec& v) {
        for (int i = 1; i <= space.dim; ++i)
            if (v.get(i) != 0) return i;
        return 0;
    };
    std::set<int> wpivots;
    for (const FqVec& b : w.basis) wpivots.insert(pivot_of(b));
    for (const FqVec& b : q.wperp.basis)
        if (!wpivots.count(pivot_of(b))) q.lift.push_back(b);
    check(static_cast<int>(q.lift.size()) == q.wperp.dim() - w.dim(),
          "complement basis has the quotient dimension");

    q.space.F = &F;
    q.space.dim = static_cast<int>(q.lift.size());
    q.space.gram.n = q.space.dim;
    for (int i = 1; i <= q.space.dim; ++i)
        for (int j = 1; j <= q.space.dim; ++j)
            q.space.gram.set(i, j, space.form(q.lift[i - 1], q.lift[j - 1]));
    return q;
}

// x induced on the quotient; requires x(W^perp) inside W^perp and x(W) = 0.
inline FqMat induce_endomorphism(const Quotient& q, const Field& F, const FqMat& x) {
    FqOps ops(F);
    FqMat out = ops.zero(q.space.dim);
    for (size_t j = 0; j < q.lift.size(); ++j) {
        FqVec img = ops.apply(x, q.lift[j]);
        FqVec coords = q.project(F, img);
        for (int i = 1; i <= q.space.dim; ++i) out.set(i, static_cast<int>(j) + 1,
                                                       coords.get(i));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Filtrations

struct Filtration {
    int ambient = 0;
    int top = 1;  // lambda_1
    std::map<int, Subspace> ge;  // levels 1-top .. top

    const Subspace& at(const Field&, int a) const {
        auto it = ge.find(std::clamp(a, 1 - top, top));
        check(it != ge.end(), "filtration level missing");
        return it->second;
    }
};

inline Filtration build_filtration(const BilinearSpace& space, const FqVec& v, const FqMat& x,
                                   const Partition& lam, ConeSide side) {
    const Field& F = *space.F;
    FqOps ops(F);
    Filtration f;
    f.ambient = space.dim;
    f.top = std::max(lam.at(1), 1);
    if (lam.at(1) <= 1) {
        f.ge[0] = full_space(F, space.dim);
        f.ge[1] = Subspace{space.dim, {}};
        return f;
    }
    Subspace w = w_subspace(space, v, x, lam, side);
    Quotient q = make_quotient(space, w);
    check(member(F, q.wperp, v), "v must lie in W^perp");
    FqVec v2 = q.project(F, v);
    FqMat x2 = induce_endomorphism(q, F, x);
    Filtration inner = build_filtration(q.space, v2, x2, drop_largest_parts(lam), side);

    int top = lam.at(1);
    for (int a = 1 - top; a <= top; ++a) {
        if (a >= top) {
            f.ge[a] = Subspace{space.dim, {}};
        } else if (a <= 1 - top) {
            f.ge[a] = full_space(F, space.dim);
        } else {
            // preimage of the inner level under W^perp -> W^perp/W
            std::vector<FqVec> rows = w.basis;
            for (const FqVec& b : inner.at(F, a).basis) rows.push_back(q.unproject(F, b));
            f.ge[a] = rref_span(F, space.dim, std::move(rows));
        }
    }
    return f;
}

// Checks every defining property plus adaptedness; theory says these can
// never fail for points of the matching piece.
inline void verify_filtration(const BilinearSpace& space, const FqVec& v, const FqMat& x,
                              const Partition& lam, ConeSide side, const Filtration& f) {
    const Field& F = *space.F;
    FqOps ops(F);
    int top = f.top;
    for (int a = 1 - top; a <= top; ++a) {
        const Subspace& s = f.at(F, a);
        check(s.dim() == lambda_filtration_dim(lam, a), "filtration level dimension");
        if (a > 1 - top) check(contains(F, f.at(F, a - 1), s), "filtration is nested");
        check(perp(space, s) == f.at(F, 1 - a), "filtration is self-perpendicular");
    }
    check(member(F, f.at(F, side == ConeSide::C ? 1 : 2), v),
          "v lies in the required filtration level");
    for (int a = -top - 1; a <= top; ++a)
        for (const FqVec& b : f.at(F, a).basis)
            check(member(F, f.at(F, a + 2), ops.apply(x, b)), "x shifts the filtration by 2");
}

}  // namespace nilpiece::cones
