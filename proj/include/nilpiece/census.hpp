#pragma once

// Exhaustive point censuses of the nilpotent cones over small finite fields,
// classified per orbit and aggregated per piece, with every line compared
// against the exact polynomial predictions. Enumeration is data-parallel
// over contiguous index blocks; per-label tallies merge by addition, so the
// report is deterministic regardless of the thread count.

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "nilpiece/classify.hpp"
#include "nilpiece/polynomials.hpp"

namespace nilpiece::cones {

enum class Cone { Exotic, Sp2, O2, SpOdd, OOdd };

inline std::string cone_name(Cone c) {
    switch (c) {
        case Cone::Exotic: return "exotic";
        case Cone::Sp2: return "sp2";
        case Cone::O2: return "o2";
        case Cone::SpOdd: return "spodd";
        case Cone::OOdd: return "oodd";
    }
    return "?";
}

struct OrbitLabel {
    Cone cone;
    Bipartition bp;
};

struct CensusLine {
    std::string section;  // orbit | piece-B | piece-C | piece-special | piece-B2 | piece-E | total
    Bipartition label;
    Partition jordan;
    long long tally = 0;
    long long expected = 0;
    bool pass = false;
};

struct CensusReport {
    Cone cone{};
    int n = 0;
    long long q = 0;
    unsigned long long space_points = 0;  // ambient enumeration space q^(2n^2+n)
    unsigned long long cone_points = 0;   // nilpotent points classified
    std::vector<Bipartition> labels;      // per-orbit label order
    std::vector<long long> tallies;       // parallel to labels
    std::vector<CensusLine> lines;
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

class BudgetExceeded : public std::runtime_error {
public:
    unsigned long long required;
    explicit BudgetExceeded(unsigned long long pts)
        : std::runtime_error("census of " + std::to_string(pts) +
                             " points exceeds the 2^24 default budget"),
          required(pts) {}
};

inline constexpr unsigned long long kCensusBudget = 1ull << 24;

namespace detail {

inline unsigned long long ipow_saturating(unsigned long long base, int e) {
    unsigned long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1ull << 62) / base) return ~0ull;
        r *= base;
    }
    return r;
}

inline int census_threads() {
    if (const char* env = std::getenv("NILPIECE_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

struct TallyState {
    std::vector<long long> tallies;
    unsigned long long cone_points = 0;
    void merge(const TallyState& o) {
        for (size_t i = 0; i < tallies.size(); ++i) tallies[i] += o.tallies[i];
        cone_points += o.cone_points;
    }
};

// Runs worker(lo, hi, state) over a partition of [0, total) into blocks.
template <class Worker>
TallyState parallel_tally(unsigned long long total, size_t n_labels, Worker worker) {
    int nt = census_threads();
    if (total < 1024) nt = 1;
    std::vector<TallyState> states(nt);
    for (auto& s : states) s.tallies.assign(n_labels, 0);
    std::vector<std::exception_ptr> errors(nt);
    std::vector<std::thread> threads;
    unsigned long long chunk = total / nt + 1;
    for (int t = 0; t < nt; ++t) {
        unsigned long long lo = std::min<unsigned long long>(t * chunk, total);
        unsigned long long hi = std::min<unsigned long long>(lo + chunk, total);
        threads.emplace_back([&, t, lo, hi] {
            try {
                worker(lo, hi, states[t]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    TallyState out = std::move(states[0]);
    for (int t = 1; t < nt; ++t) out.merge(states[t]);
    return out;
}

// Digit decoder: base-q digits of idx in a fixed low-to-high order.
struct Digits {
    unsigned long long idx;
    long long q;
    int next() {
        int d = static_cast<int>(idx % q);
        idx /= q;
        return d;
    }
};

// Free matrix positions of sp (char 2): on or above the skew diagonal.
inline std::vector<std::pair<int, int>> sp2_positions(int d) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d + 1 - i; ++j) pos.emplace_back(i, j);
    return pos;
}

// Free positions of o(V) (char 2): strictly above the skew diagonal.
inline std::vector<std::pair<int, int>> oV_positions(int d) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d - i; ++j) pos.emplace_back(i, j);
    return pos;
}

template <class Ops>
typename Ops::Mat decode_mirrored(const Ops& ops, int d,
                                  const std::vector<std::pair<int, int>>& pos, Digits digits) {
    auto m = ops.zero(d);
    for (auto [i, j] : pos) {
        int v = digits.next();
        if (v) {
            ops.set(m, i, j, static_cast<uint8_t>(v));
            ops.set(m, d + 1 - j, d + 1 - i, static_cast<uint8_t>(v));
        }
    }
    return m;
}

template <class Ops>
typename Ops::Vec decode_vector(const Ops& ops, int d, Digits digits) {
    auto v = ops.vzero(d);
    for (int i = 1; i <= d; ++i) {
        int x = digits.next();
        if (x) ops.vset(v, i, static_cast<uint8_t>(x));
    }
    return v;
}

// Odd characteristic: x = Omega^{-1} S for symmetric S (split symplectic
// Gram), so x_{ij} = -eps_i S_{d+1-i,j}; free digits fill S on i <= j.
template <class Ops>
typename Ops::Mat decode_sp_odd(const Ops& ops, const Field& F, int d, Digits digits) {
    fq::FqMat s{};
    s.n = d;
    for (int i = 1; i <= d; ++i)
        for (int j = i; j <= d; ++j) {
            int v = digits.next();
            s.set(i, j, static_cast<uint8_t>(v));
            s.set(j, i, static_cast<uint8_t>(v));
        }
    auto x = ops.zero(d);
    for (int i = 1; i <= d; ++i) {
        bool eps = i <= d / 2;
        for (int j = 1; j <= d; ++j) {
            uint8_t v = s.get(d + 1 - i, j);
            ops.set(x, i, j, eps ? F.neg(v) : v);
        }
    }
    return x;
}

// Odd characteristic: x = G A for antisymmetric A (all-ones antidiagonal
// Gram), so x_{ij} = A_{d+1-i,j}; free digits fill A on i < j.
template <class Ops>
typename Ops::Mat decode_o_odd(const Ops& ops, const Field& F, int d, Digits digits) {
    fq::FqMat a{};
    a.n = d;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            int v = digits.next();
            a.set(i, j, static_cast<uint8_t>(v));
            a.set(j, i, F.neg(static_cast<uint8_t>(v)));
        }
    auto x = ops.zero(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) ops.set(x, i, j, a.get(d + 1 - i, j));
    return x;
}

template <class Ops>
TallyState census_flat(const Ops& ops, const Field& F, Cone cone, int n, long long q,
                       const ClassificationTable& table) {
    int d = (cone == Cone::OOdd) ? 2 * n + 1 : 2 * n;
    auto pos = sp2_positions(2 * n);
    int n_digits = (cone == Cone::Sp2) ? static_cast<int>(pos.size())
                                       : d * (d - 1) / 2 + (cone == Cone::SpOdd ? d : 0);
    unsigned long long total = ipow_saturating(q, n_digits);
    return parallel_tally(total, table.labels.size(),
                          [&](unsigned long long lo, unsigned long long hi, TallyState& st) {
        for (unsigned long long idx = lo; idx < hi; ++idx) {
            Digits digits{idx, q};
            typename Ops::Mat m;
            switch (cone) {
                case Cone::Sp2: m = decode_mirrored(ops, d, pos, digits); break;
                case Cone::SpOdd: m = decode_sp_odd(ops, F, d, digits); break;
                default: m = decode_o_odd(ops, F, d, digits); break;
            }
            if (!fq::is_nilpotent(ops, m)) continue;
            ++st.cone_points;
            int id;
            if (cone == Cone::Sp2) {
                id = classify_sp_char2_id(ops, F, m, table);
            } else {
                Bipartition bp = (cone == Cone::SpOdd) ? classify_sp_odd(ops, F, m)
                                                       : classify_o_odd(ops, F, m);
                auto it = table.key_to_label.find(classification_key(
                    cone == Cone::SpOdd ? phi_C(bp) : phi_B(bp), HesselinkIndex{}));
                check(it != table.key_to_label.end(), "odd-characteristic label missing");
                id = it->second;
            }
            ++st.tallies[id];
        }
    });
}

// Exotic and O2 censuses enumerate pairs (v, x) with x in o(V); O2 classifies
// the image Psi~(v,x), Exotic classifies Psi(v,x).
template <class Ops>
TallyState census_pairs(const Ops& ops, const Field& F, Cone cone, int n, long long q,
                        const ClassificationTable& table) {
    int d = 2 * n;
    auto pos = oV_positions(d);
    unsigned long long x_total = ipow_saturating(q, static_cast<int>(pos.size()));
    unsigned long long v_total = ipow_saturating(q, d);
    return parallel_tally(x_total, table.labels.size(),
                          [&](unsigned long long lo, unsigned long long hi, TallyState& st) {
        for (unsigned long long xi = lo; xi < hi; ++xi) {
            auto x = decode_mirrored(ops, d, pos, Digits{xi, q});
            if (!fq::is_nilpotent(ops, x)) continue;
            for (unsigned long long vi = 0; vi < v_total; ++vi) {
                auto v = decode_vector(ops, d, Digits{vi, q});
                ++st.cone_points;
                int id;
                if (cone == Cone::Exotic) {
                    auto y = psi(ops, F, v, x);
                    id = classify_sp_char2_id(ops, F, y, table);
                    check(fq::jordan_type(ops, x) ==
                              duplicate(add_parts(table.labels[id].mu, table.labels[id].nu)),
                          "exotic label disagrees with the Jordan type of x");
                } else {
                    auto y = psi_tilde(ops, F, v, x);
                    id = classify_o_char2_id(ops, F, y, table);
                }
                ++st.tallies[id];
            }
        }
    });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Report assembly

inline CensusReport run_census(Cone cone, int n, long long q, bool override_budget = false) {
    require(n >= 0, "n must be nonnegative");
    bool char2 = (cone == Cone::Exotic || cone == Cone::Sp2 || cone == Cone::O2);
    if (char2)
        require(q == 2 || q == 4 || q == 8, "characteristic-2 cones need q in {2,4,8}");
    else
        require(q == 3 || q == 5 || q == 9, "odd-characteristic cones need q in {3,5,9}");
    const Field& F = Field::gf(static_cast<int>(q));

    CensusReport rep;
    rep.cone = cone;
    rep.n = n;
    rep.q = q;
    rep.space_points = detail::ipow_saturating(q, 2 * n * n + n);
    if (rep.space_points > kCensusBudget && !override_budget)
        throw BudgetExceeded(rep.space_points);

    // Classification table and label order per cone.
    ClassificationTable table;
    switch (cone) {
        case Cone::Exotic:
        case Cone::Sp2:
            table = class_table_C2(n);
            break;
        case Cone::O2:
            table = class_table_B2(n);
            break;
        case Cone::SpOdd:
            for (const Bipartition& bp : enumerate_bipartitions(n))
                if (is_C_dist(bp)) table.labels.push_back(bp);
            for (int i = 0; i < static_cast<int>(table.labels.size()); ++i)
                table.key_to_label.emplace(
                    classification_key(phi_C(table.labels[i]), HesselinkIndex{}), i);
            break;
        case Cone::OOdd:
            for (const Bipartition& bp : enumerate_bipartitions(n))
                if (is_B_dist(bp)) table.labels.push_back(bp);
            for (int i = 0; i < static_cast<int>(table.labels.size()); ++i)
                table.key_to_label.emplace(
                    classification_key(phi_B(table.labels[i]), HesselinkIndex{}), i);
            break;
    }

    detail::TallyState st;
    bool pairs = (cone == Cone::Exotic || cone == Cone::O2);
    if (q == 2) {
        fq::Gf2Ops ops;
        st = pairs ? detail::census_pairs(ops, F, cone, n, q, table)
                   : detail::census_flat(ops, F, cone, n, q, table);
    } else {
        fq::FqOps ops(F);
        st = pairs ? detail::census_pairs(ops, F, cone, n, q, table)
                   : detail::census_flat(ops, F, cone, n, q, table);
    }
    rep.labels = table.labels;
    rep.tallies = st.tallies;
    rep.cone_points = st.cone_points;

    long long tally_sum = 0;
    for (long long t : rep.tallies) tally_sum += t;
    check(tally_sum == static_cast<long long>(rep.cone_points),
          "orbit tallies must sum to the cone's point count");

    auto tally_of = [&](const Bipartition& bp) {
        for (size_t i = 0; i < rep.labels.size(); ++i)
            if (rep.labels[i] == bp) return rep.tallies[i];
        throw std::logic_error("label missing from census");
    };
    auto add_line = [&](std::string section, const Bipartition& label, Partition jordan,
                        long long tally, long long expected) {
        rep.lines.push_back(
            {std::move(section), label, std::move(jordan), tally, expected, tally == expected});
    };

    // Per-orbit lines.
    for (size_t i = 0; i < rep.labels.size(); ++i) {
        const Bipartition& bp = rep.labels[i];
        Partition jt;
        IntPolynomial expected;
        switch (cone) {
            case Cone::Exotic:
                jt = duplicate(add_parts(bp.mu, bp.nu));
                expected = exotic_point_poly(bp);
                break;
            case Cone::Sp2:
                jt = phi_C(bp);
                expected = exotic_point_poly(bp);
                break;
            case Cone::O2:
                jt = phi_B2(bp);
                expected = piece_poly(PiecePoly::Tilde, bp);
                break;
            case Cone::SpOdd:
                jt = phi_C(bp);
                expected = typeC_point_poly(bp);
                break;
            case Cone::OOdd:
                jt = phi_B(bp);
                expected = typeB_point_poly(bp);
                break;
        }
        add_line("orbit", bp, jt, rep.tallies[i], evaluate(expected, q));
    }

    // Piece aggregations. Each family sums orbit tallies over the fiber of
    // the matching collapse restricted to this cone's label set.
    auto aggregate = [&](PieceKind kind, const std::string& section,
                         auto expected_poly, auto jordan_of) {
        for (const Bipartition& target : enumerate_bipartitions(n)) {
            if (!in_sub_poset(target, kind)) continue;
            long long sum = 0;
            for (const Bipartition& label : rep.labels)
                if (collapse(label, kind) == target) sum += tally_of(label);
            add_line(section, target, jordan_of(target), sum,
                     evaluate(expected_poly(target), q));
        }
    };

    if (cone == Cone::Exotic || cone == Cone::Sp2) {
        aggregate(PieceKind::C, "piece-C", [](const Bipartition& t) { return typeC_point_poly(t); },
                  [](const Bipartition& t) { return phi_C(t); });
        aggregate(PieceKind::Special, "piece-special",
                  [](const Bipartition& t) { return piece_poly(PiecePoly::Special, t); },
                  [](const Bipartition& t) { return phi_C(collapse_C(t)); });
        aggregate(PieceKind::Tilde, "piece-B2",
                  [](const Bipartition& t) { return piece_poly(PiecePoly::Tilde, t); },
                  [](const Bipartition& t) { return phi_B2(t); });
    }
    if (cone == Cone::Exotic) {
        aggregate(PieceKind::B, "piece-B",
                  [](const Bipartition& t) { return typeB_point_poly(t); },
                  [](const Bipartition& t) { return phi_B(t); });
        // E pieces: down-sets of preceq over all labels.
        for (const Bipartition& target : enumerate_bipartitions(n)) {
            long long sum = 0;
            for (const Bipartition& label : rep.labels)
                if (preceq(label, target)) sum += tally_of(label);
            add_line("piece-E", target, duplicate(add_parts(target.mu, target.nu)), sum,
                     evaluate(piece_poly(PiecePoly::E, target), q));
        }
    }
    if (cone == Cone::O2) {
        aggregate(PieceKind::B, "piece-B",
                  [](const Bipartition& t) { return typeB_point_poly(t); },
                  [](const Bipartition& t) { return phi_B(t); });
        aggregate(PieceKind::Special, "piece-special",
                  [](const Bipartition& t) { return piece_poly(PiecePoly::Special, t); },
                  [](const Bipartition& t) { return phi_B(collapse_B(t)); });
        for (const Bipartition& target : enumerate_bipartitions(n)) {
            if (!is_B2_dist(target)) continue;
            long long sum = 0;
            for (const Bipartition& label : rep.labels)
                if (preceq(label, target)) sum += tally_of(label);
            add_line("piece-E", target, phi_B2(target), sum,
                     evaluate(piece_poly(PiecePoly::ScriptE, target), q));
        }
    }
    if (cone == Cone::SpOdd || cone == Cone::OOdd) {
        for (const Bipartition& target : enumerate_bipartitions(n)) {
            if (!is_special(target)) continue;
            long long sum = 0;
            for (const Bipartition& label : rep.labels)
                if (collapse_special(label) == target) sum += tally_of(label);
            add_line("piece-special", target, Partition{}, sum,
                     evaluate(piece_poly(PiecePoly::Special, target), q));
        }
    }

    add_line("total", Bipartition{}, Partition{}, static_cast<long long>(rep.cone_points),
             evaluate(IntPolynomial::monomial(1, 2 * n * n), q));
    return rep;
}

}  // namespace nilpiece::cones
