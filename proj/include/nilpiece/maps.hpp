#pragma once

// The combinatorial maps between bipartitions and partitions: Phi^C, Phi^B,
// Phi^{B,2}, their one-sided inverses, the collapses onto distinguished
// sub-posets, Hesselink index data, and the filtration dimension counts.

#include <map>
#include <optional>
#include <set>

#include "nilpiece/partitions.hpp"

namespace nilpiece {

// Finite association part value -> nonnegative integer (chi or chi-tilde).
struct HesselinkIndex {
    std::map<int, int> assignments;
    friend bool operator==(const HesselinkIndex&, const HesselinkIndex&) = default;
    friend auto operator<=>(const HesselinkIndex& a, const HesselinkIndex& b) {
        return a.assignments <=> b.assignments;
    }
};

inline std::string to_string(const HesselinkIndex& h) {
    std::string s = "{";
    bool first = true;
    for (auto [m, v] : h.assignments) {
        if (!first) s += ", ";
        s += std::to_string(m) + "->" + std::to_string(v);
        first = false;
    }
    return s + "}";
}

namespace detail {

// Left-to-right replacement pass: whenever v[i] < v[i+1], both become the
// average. Records, for each output slot, half of the value that stood at the
// left position (which is the chi value in the type-C reading). Replacements
// never overlap for quasi-partition input; the monotonicity assertion below
// would fire otherwise.
struct PassResult {
    std::vector<int> value;
    std::vector<int> chi_numerator;  // per slot: old left value (chi = half)
};

inline PassResult replacement_pass(std::vector<int> v) {
    PassResult r;
    size_t i = 0;
    while (i < v.size()) {
        if (i + 1 < v.size() && v[i] < v[i + 1]) {
            int sum = v[i] + v[i + 1];
            check(sum % 2 == 0, "replacement average must be an integer");
            r.value.push_back(sum / 2);
            r.value.push_back(sum / 2);
            r.chi_numerator.push_back(v[i]);
            r.chi_numerator.push_back(v[i]);
            i += 2;
        } else {
            r.value.push_back(v[i]);
            r.chi_numerator.push_back(v[i]);
            i += 1;
        }
    }
    for (size_t k = 1; k < r.value.size(); ++k)
        check(r.value[k - 1] >= r.value[k], "replacement pass produced a non-partition");
    return r;
}

inline PassResult phi_C_pass(const Bipartition& bp) {
    int len = std::max(bp.mu.size(), bp.nu.size()) + 1;
    std::vector<int> seq;
    seq.reserve(2 * len);
    for (int i = 1; i <= len; ++i) {
        seq.push_back(2 * bp.mu.at(i));
        seq.push_back(2 * bp.nu.at(i));
    }
    return replacement_pass(std::move(seq));
}

}  // namespace detail

// Phi^C: double the interleaved parts, then average every ascent.
inline Partition phi_C(const Bipartition& bp) {
    auto r = detail::phi_C_pass(bp);
    Partition out{Composition(std::move(r.value))};
    check(out.weight() == 2 * bp.weight(), "Phi^C weight");
    check(is_P2nC(out), "Phi^C image must lie in P_{2n}^C");
    return out;
}

// Hesselink index chi_{mu;nu} on the parts of Phi^C(mu;nu): an unaltered part
// 2s gets s, a replaced pair s+t (from 2s < 2t) gets s.
inline HesselinkIndex hesselink_C(const Bipartition& bp) {
    auto r = detail::phi_C_pass(bp);
    HesselinkIndex h;
    for (size_t k = 0; k < r.value.size(); ++k) {
        if (r.value[k] == 0) continue;
        check(r.chi_numerator[k] % 2 == 0, "chi numerator parity");
        int chi = r.chi_numerator[k] / 2;
        check(chi >= 0 && 2 * chi <= r.value[k], "chi out of range [0, m/2]");
        auto [it, inserted] = h.assignments.emplace(r.value[k], chi);
        check(inserted || it->second == chi, "conflicting Hesselink assignments");
    }
    return h;
}

// Inverse of Phi^C on P_{2n}^C: halve even parts; a run of 2j odd parts 2k+1
// becomes k,k+1 repeated j times.
inline Bipartition hat_phi_C(const Partition& lam) {
    require(is_P2nC(lam), "hat Phi^C needs a partition in P_{2n}^C");
    std::vector<int> q;
    const auto& p = lam.parts();
    q.reserve(p.size());
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (p[i] % 2 == 0) {
            for (size_t k = i; k < j; ++k) q.push_back(p[i] / 2);
        } else {
            int k = (p[i] - 1) / 2;
            check((j - i) % 2 == 0, "odd part with odd multiplicity");
            for (size_t t = i; t < j; t += 2) {
                q.push_back(k);
                q.push_back(k + 1);
            }
        }
        i = j;
    }
    Composition c(std::move(q));
    check(c.is_quasi_partition(), "hat Phi^C output is a quasi-partition");
    Bipartition out = from_quasi_partition(c);
    check(2 * out.weight() == lam.weight(), "hat Phi^C weight");
    check(is_C_dist(out), "hat Phi^C image must be C-distinguished");
    return out;
}

// (rho;sigma)^C, the minimum C-distinguished bipartition above the input.
inline Bipartition collapse_C(const Bipartition& bp) { return hat_phi_C(phi_C(bp)); }

// Phi^B: the sequence (2rho_1+1, 2sigma_1-1, ...) with every ascent averaged.
// The infinite (-1,1) tail collapses to zeros; a window two pairs past the
// data provably contains all nonzero activity, which the asserts confirm.
inline Partition phi_B(const Bipartition& bp) {
    int len = std::max(bp.mu.size(), bp.nu.size()) + 2;
    std::vector<int> seq;
    seq.reserve(2 * len + 1);
    for (int i = 1; i <= len; ++i) {
        seq.push_back(2 * bp.mu.at(i) + 1);
        seq.push_back(2 * bp.nu.at(i) - 1);
    }
    seq.push_back(2 * bp.mu.at(len + 1) + 1);
    auto r = detail::replacement_pass(std::move(seq));
    int data_window = 2 * std::max(bp.mu.size(), bp.nu.size()) + 2;
    for (size_t k = 0; k < r.value.size(); ++k) {
        check(r.value[k] >= 0, "Phi^B left a negative entry");
        if (k >= static_cast<size_t>(data_window))
            check(r.value[k] == 0, "Phi^B tail did not map to zero");
    }
    Partition out{Composition(std::move(r.value))};
    check(out.weight() == 2 * bp.weight() + 1, "Phi^B weight");
    check(is_P2n1B(out), "Phi^B image must lie in P_{2n+1}^B");
    return out;
}

// Inverse of Phi^B on P_{2n+1}^B. Odd parts map positionally; a maximal run
// of equal even parts 2k starting at 1-based position i becomes k,k,... for
// even i and k-1,k+1,... for odd i.
inline Bipartition hat_phi_B(const Partition& lam) {
    require(is_P2n1B(lam), "hat Phi^B needs a partition in P_{2n+1}^B");
    const auto& p = lam.parts();
    check(p.size() % 2 == 1, "P_{2n+1}^B partitions have odd length");
    std::vector<int> q;
    q.reserve(p.size());
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        int pos = static_cast<int>(i) + 1;  // 1-based run start
        if (p[i] % 2 == 1) {
            for (size_t t = i; t < j; ++t) {
                int sign = ((t + 1) % 2 == 1) ? -1 : +1;
                q.push_back((p[t] + sign) / 2);
            }
        } else {
            int k = p[i] / 2;
            check((j - i) % 2 == 0, "even part with odd multiplicity");
            if (pos % 2 == 0) {
                for (size_t t = i; t < j; ++t) q.push_back(k);
            } else {
                for (size_t t = i; t < j; t += 2) {
                    q.push_back(k - 1);
                    q.push_back(k + 1);
                }
            }
        }
        i = j;
    }
    Composition c(std::move(q));
    check(c.is_quasi_partition(), "hat Phi^B output is a quasi-partition");
    Bipartition out = from_quasi_partition(c);
    check(2 * out.weight() + 1 == lam.weight(), "hat Phi^B weight");
    check(is_B_dist(out), "hat Phi^B image must be B-distinguished");
    return out;
}

inline Bipartition collapse_B(const Bipartition& bp) { return hat_phi_B(phi_B(bp)); }

// (rho;sigma)^o, the minimum special bipartition above the input.
inline Bipartition collapse_special(const Bipartition& bp) {
    Bipartition out = collapse_B(collapse_C(bp));
    check(is_special(out), "special collapse lands in Q_n^o");
    return out;
}

// (rho;sigma)^~, the minimum element of Q_n^{B,2} above the input: whenever
// rho_i < sigma_i - 2, the pair becomes (ceil(s/2)-1, floor(s/2)+1).
inline Bipartition collapse_tilde(const Bipartition& bp) {
    int len = std::max(bp.mu.size(), bp.nu.size());
    std::vector<int> m, s;
    for (int i = 1; i <= len; ++i) {
        int a = bp.mu.at(i), b = bp.nu.at(i);
        if (a < b - 2) {
            int sum = a + b;
            m.push_back((sum + 1) / 2 - 1);
            s.push_back(sum / 2 + 1);
        } else {
            m.push_back(a);
            s.push_back(b);
        }
    }
    Bipartition out{Partition(Composition(std::move(m))), Partition(Composition(std::move(s)))};
    check(is_B2_dist(out), "tilde collapse lands in Q_n^{B,2}");
    check(preceq(bp, out), "bp preceq its tilde collapse");
    return out;
}

// Phi^{B,2}(mu;nu): (mu+nu) cup (mu+nu) with one box added in row 2*len(nu)+1.
inline Partition phi_B2(const Bipartition& bp) {
    Partition sum = add_parts(bp.mu, bp.nu);
    std::vector<int> parts = duplicate(sum).parts();
    size_t pos = 2 * static_cast<size_t>(bp.nu.size());  // 0-based row index
    if (parts.size() <= pos) parts.resize(pos + 1, 0);
    parts[pos] += 1;
    Partition out{Composition(std::move(parts))};
    check(out.weight() == 2 * bp.weight() + 1, "Phi^{B,2} weight");
    return out;
}

// chi-tilde on the parts of Phi^{B,2}(mu;nu), for (mu;nu) in Q_n^{B,2}.
inline HesselinkIndex hesselink_B2(const Bipartition& bp) {
    require(is_B2_dist(bp), "hesselink_B2 needs a B2-distinguished bipartition");
    HesselinkIndex h;
    auto assign = [&h](int part, int value) {
        if (part == 0) return;
        auto [it, inserted] = h.assignments.emplace(part, value);
        check(inserted || it->second == value, "chi-tilde rules conflict");
    };
    int lnu = bp.nu.size();
    assign(bp.mu.at(lnu + 1) + 1, bp.mu.at(lnu + 1) + 1);
    int len = std::max(bp.mu.size(), bp.nu.size());
    for (int i = 1; i <= len; ++i) {
        int part = bp.mu.at(i) + bp.nu.at(i);
        assign(part, i <= lnu ? bp.mu.at(i) + 1 : bp.mu.at(i));
    }
    // Domain must be exactly the set of parts of Phi^{B,2}.
    Partition lam = phi_B2(bp);
    std::set<int> parts(lam.parts().begin(), lam.parts().end());
    std::set<int> domain;
    for (auto [m, v] : h.assignments) domain.insert(m);
    check(parts == domain, "chi-tilde domain mismatch");
    return h;
}

// Unique bipartition with the given Jordan type and Hesselink index, found
// by searching the full enumeration; the characteristic-2 orbit
// classification guarantees there is exactly one.
inline Bipartition invert_jordan_C(const Partition& lam, const HesselinkIndex& chi) {
    require(lam.weight() % 2 == 0, "type-C Jordan types have even weight");
    int n = lam.weight() / 2;
    std::optional<Bipartition> found;
    for (const Bipartition& bp : enumerate_bipartitions(n)) {
        if (phi_C(bp) == lam && hesselink_C(bp) == chi) {
            require(!found, "multiple bipartitions match classification data");
            found = bp;
        }
    }
    require(found.has_value(), "no bipartition matches classification data");
    return *found;
}

inline Bipartition invert_jordan_B2(const Partition& lam, const HesselinkIndex& chi) {
    require(lam.weight() % 2 == 1, "type-(B,2) Jordan types have odd weight");
    int n = (lam.weight() - 1) / 2;
    std::optional<Bipartition> found;
    for (const Bipartition& bp : enumerate_bipartitions(n)) {
        if (!is_B2_dist(bp)) continue;
        if (phi_B2(bp) == lam && hesselink_B2(bp) == chi) {
            require(!found, "multiple bipartitions match classification data");
            found = bp;
        }
    }
    require(found.has_value(), "no bipartition matches classification data");
    return *found;
}

// ---------------------------------------------------------------------------
// Pieces as fibers of the collapses

enum class PieceKind { B, C, Special, Tilde };

inline Bipartition collapse(const Bipartition& bp, PieceKind kind) {
    switch (kind) {
        case PieceKind::B: return collapse_B(bp);
        case PieceKind::C: return collapse_C(bp);
        case PieceKind::Special: return collapse_special(bp);
        case PieceKind::Tilde: return collapse_tilde(bp);
    }
    throw std::logic_error("bad PieceKind");
}

inline bool in_sub_poset(const Bipartition& bp, PieceKind kind) {
    switch (kind) {
        case PieceKind::B: return is_B_dist(bp);
        case PieceKind::C: return is_C_dist(bp);
        case PieceKind::Special: return is_special(bp);
        case PieceKind::Tilde: return is_B2_dist(bp);
    }
    throw std::logic_error("bad PieceKind");
}

// All bipartitions of n whose collapse of the given kind equals target.
inline std::vector<Bipartition> fiber(PieceKind kind, const Bipartition& target, int n) {
    require(target.weight() == n, "target must be a bipartition of n");
    require(in_sub_poset(target, kind), "fiber target must lie in the matching sub-poset");
    std::vector<Bipartition> out;
    for (const Bipartition& bp : enumerate_bipartitions(n))
        if (collapse(bp, kind) == target) out.push_back(bp);
    return out;
}

// ---------------------------------------------------------------------------
// Lambda-filtration dimensions and the resolution dimension identities

// dim V_{>=a} for a lambda-filtration; lambda in P_{2n}^C or P_{2n+1}^B.
inline int lambda_filtration_dim(const Partition& lam, int a) {
    int dimV = lam.weight() - lam.weight() % 2;
    if (a <= 0) return dimV - lambda_filtration_dim(lam, 1 - a);
    int d = 0;
    for (int x : lam.parts())
        if (x > a) d += (x - a + 1) / 2;
    return d;
}

// Jacobson-Morozov weight-space dimensions: a size-m block contributes one
// dimension in each of the weights m-1, m-3, ..., 1-m.
inline std::map<int, int> grading_dims(const Partition& lam) {
    std::map<int, int> dims;
    for (int m : lam.parts())
        for (int w = m - 1; w >= 1 - m; w -= 2) dims[w] += 1;
    return dims;
}

struct ResolutionDimReport {
    int flag_dim = 0;       // dim Sp(V)/P
    int dim_v_part = 0;     // dim V_{>=1} (type C) or dim V_{>=2} (type B)
    int dim_s_ge2 = 0;      // dim S_{>=2}
    int total = 0;
    int expected = 0;       // 2(n^2 - b)
    bool pass = false;
};

namespace detail {

inline int at_or_zero(const std::map<int, int>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
}

// Graded dimension of sp(V) in degree a, from the graded dims of V.
inline int sp_graded_dim(const std::map<int, int>& v, int a) {
    int d = 0;
    for (auto [b, db] : v) {
        int c = a - b;
        if (c > b) d += db * at_or_zero(v, c);
    }
    if (a % 2 == 0) {
        int h = at_or_zero(v, a / 2);
        d += h * (h + 1) / 2;
    }
    return d;
}

// Graded dimension of o(V) in degree a (alternating forms).
inline int o_graded_dim(const std::map<int, int>& v, int a) {
    int d = 0;
    for (auto [b, db] : v) {
        int c = a - b;
        if (c > b) d += db * at_or_zero(v, c);
    }
    if (a % 2 == 0) {
        int h = at_or_zero(v, a / 2);
        d += h * (h - 1) / 2;
    }
    return d;
}

inline int max_degree(const std::map<int, int>& v) {
    return v.empty() ? 0 : v.rbegin()->first;
}

// Both displayed formulas: dim of the degree->=2 part of sp(V) resp. S, from
// the graded dims of V.
inline int sp_ge2_dim(const std::map<int, int>& v) {
    int d = 0;
    for (auto [a, da] : v) {
        if (a < 1) continue;
        d += da * (da + 1) / 2;
        if (a >= 2)
            for (int b = 1 - a; b <= a - 2; ++b) d += da * at_or_zero(v, b);
    }
    return d;
}

inline int s_ge2_dim(const std::map<int, int>& v) {
    int d = 0;
    for (auto [a, da] : v) {
        if (a < 1) continue;
        d += da * (da - 1) / 2;
        if (a >= 2)
            for (int b = 1 - a; b <= a - 2; ++b) d += da * at_or_zero(v, b);
    }
    return d;
}

}  // namespace detail

enum class ConeSide { B, C };

// Verifies the dimension identity behind the smoothness theorems: the flag
// variety dimension plus dim V_{>=1} (resp. V_{>=2}) plus dim S_{>=2} equals
// 2(n^2 - b). For type B the orthogonal-side count is matched as well.
inline ResolutionDimReport resolution_dim_check(const Bipartition& bp, ConeSide side) {
    ResolutionDimReport rep;
    int n = bp.weight();
    rep.expected = 2 * (n * n - b_stat(bp));
    if (side == ConeSide::C) {
        require(is_C_dist(bp), "type-C check needs a C-distinguished bipartition");
        Partition lam = phi_C(bp);
        std::map<int, int> v = grading_dims(lam);
        int top = detail::max_degree(v);
        int flag = 0, sp_ge2 = 0;
        for (int a = 1; a <= 2 * top; ++a) {
            int d = detail::sp_graded_dim(v, a);
            flag += d;
            if (a >= 2) sp_ge2 += d;
        }
        rep.flag_dim = flag;
        rep.dim_v_part = lambda_filtration_dim(lam, 1);
        rep.dim_s_ge2 = detail::s_ge2_dim(v);
        check(detail::sp_ge2_dim(v) == sp_ge2, "two routes to dim sp_{>=2} disagree");
        check(sp_ge2 == rep.dim_v_part + rep.dim_s_ge2,
              "dim sp_{>=2} = dim V_{>=1} + dim S_{>=2}");
    } else {
        require(is_B_dist(bp), "type-B check needs a B-distinguished bipartition");
        Partition lam = phi_B(bp);
        // Filtration dims of the 2n-dimensional symplectic space V.
        std::map<int, int> v;
        int top = lam.at(1);
        for (int a = -top; a <= top; ++a) {
            int d = lambda_filtration_dim(lam, a) - lambda_filtration_dim(lam, a + 1);
            if (d != 0) v[a] = d;
        }
        std::map<int, int> vt = grading_dims(lam);  // the (2n+1)-dim space
        int flag = 0, flag_b = 0, o_ge2 = 0;
        for (int a = 1; a <= 2 * top; ++a) {
            flag += detail::sp_graded_dim(v, a);
            int d = detail::o_graded_dim(vt, a);
            flag_b += d;
            if (a >= 2) o_ge2 += d;
        }
        check(flag == flag_b, "Sp(V)/P and SO(V~)/P~ have equal dimension");
        rep.flag_dim = flag;
        int dim_v_ge2 = 0;
        for (auto [a, da] : v)
            if (a >= 2) dim_v_ge2 += da;
        rep.dim_v_part = dim_v_ge2;
        rep.dim_s_ge2 = detail::s_ge2_dim(v);
        check(flag_b + o_ge2 == rep.flag_dim + rep.dim_v_part + rep.dim_s_ge2,
              "orthogonal-side resolution dimension disagrees");
    }
    rep.total = rep.flag_dim + rep.dim_v_part + rep.dim_s_ge2;
    rep.pass = (rep.total == rep.expected);
    return rep;
}

}  // namespace nilpiece
