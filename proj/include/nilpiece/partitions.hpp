#pragma once

// Partitions, compositions and bipartitions, with the interleaved dominance
// order and the statistics used throughout the library. All types are
// immutable values; canonical form strips trailing zeros.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilpiece {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Internal consistency condition that theory guarantees; firing means a bug.
inline void check(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error("internal check failed: " + msg);
}

// A finite sequence of nonnegative integers with an implicit zero tail.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) require(p >= 0, "composition parts must be nonnegative");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }

    // 1-based access, zero beyond the stored length.
    int at(int i) const {
        require(i >= 1, "index is 1-based");
        return i <= size() ? parts_[i - 1] : 0;
    }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool is_partition() const {
        for (size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i]) return false;
        return true;
    }

    // pi_i >= pi_{i+2} for all i.
    bool is_quasi_partition() const {
        for (size_t i = 2; i < parts_.size(); ++i)
            if (parts_[i - 2] < parts_[i]) return false;
        return true;
    }

    friend bool operator==(const Composition& a, const Composition& b) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Weakly decreasing composition of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : c_(std::move(parts)) {
        require(c_.is_partition(), "parts must be weakly decreasing");
    }
    explicit Partition(const Composition& c) : c_(c) {
        require(c_.is_partition(), "parts must be weakly decreasing");
    }

    const std::vector<int>& parts() const { return c_.parts(); }
    int size() const { return c_.size(); }       // number of nonzero parts
    int length() const { return c_.size(); }
    int at(int i) const { return c_.at(i); }     // 1-based, zero-padded
    int weight() const { return c_.weight(); }
    bool empty() const { return c_.size() == 0; }
    const Composition& as_composition() const { return c_; }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.c_ <=> b.c_;
    }

private:
    Composition c_;
};

// Ordered pair of partitions (mu;nu); the interleaving (mu1,nu1,mu2,nu2,...)
// is automatically a quasi-partition.
struct Bipartition {
    Partition mu;
    Partition nu;

    Bipartition() = default;
    Bipartition(Partition m, Partition n) : mu(std::move(m)), nu(std::move(n)) {}
    Bipartition(std::vector<int> m, std::vector<int> n)
        : mu(std::move(m)), nu(std::move(n)) {}

    int weight() const { return mu.weight() + nu.weight(); }

    friend bool operator==(const Bipartition& a, const Bipartition& b) = default;
    friend std::strong_ordering operator<=>(const Bipartition& a, const Bipartition& b) {
        if (auto c = a.mu <=> b.mu; c != 0) return c;
        return a.nu <=> b.nu;
    }
};

// ---------------------------------------------------------------------------
// Formatting

inline std::string to_string(const Composition& c) {
    std::string s = "(";
    for (int i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.parts()[i]);
    }
    return s + ")";
}

inline std::string to_string(const Partition& p) { return to_string(p.as_composition()); }

inline std::string to_string(const Bipartition& bp) {
    return "(" + to_string(bp.mu) + ";" + to_string(bp.nu) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << to_string(c); }
inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Bipartition& b) { return os << to_string(b); }

// ---------------------------------------------------------------------------
// Dominance and interleaving

// Prefix-sum dominance; both arguments must have equal weight.
inline bool dominance_leq(const Composition& a, const Composition& b) {
    require(a.weight() == b.weight(), "dominance compares compositions of equal weight");
    int len = std::max(a.size(), b.size());
    long long sa = 0, sb = 0;
    for (int i = 1; i <= len; ++i) {
        sa += a.at(i);
        sb += b.at(i);
        if (sa > sb) return false;
    }
    return true;
}

inline Composition interleave(const Bipartition& bp) {
    std::vector<int> out;
    int len = std::max(bp.mu.size(), bp.nu.size());
    out.reserve(2 * len);
    for (int i = 1; i <= len; ++i) {
        out.push_back(bp.mu.at(i));
        out.push_back(bp.nu.at(i));
    }
    return Composition(std::move(out));
}

inline Bipartition from_quasi_partition(const Composition& c) {
    require(c.is_quasi_partition(), "not a quasi-partition");
    std::vector<int> mu, nu;
    for (int i = 1; i <= c.size(); ++i)
        (i % 2 == 1 ? mu : nu).push_back(c.at(i));
    return Bipartition(Partition(std::move(mu)), Partition(std::move(nu)));
}

inline bool bipartition_leq(const Bipartition& a, const Bipartition& b) {
    require(a.weight() == b.weight(), "bipartitions of unequal weight are incomparable");
    return dominance_leq(interleave(a), interleave(b));
}

// b(mu;nu) = 0*mu1 + 1*nu1 + 2*mu2 + 3*nu2 + ...
inline int b_stat(const Bipartition& bp) {
    Composition c = interleave(bp);
    int b = 0;
    for (int i = 1; i <= c.size(); ++i) b += (i - 1) * c.at(i);
    return b;
}

// ---------------------------------------------------------------------------
// Elementary operations on partitions

// Termwise sum mu+nu. For components of a bipartition the result is always
// weakly decreasing; reject other inputs.
inline Partition add_parts(const Partition& a, const Partition& b) {
    int len = std::max(a.size(), b.size());
    std::vector<int> out;
    out.reserve(len);
    for (int i = 1; i <= len; ++i) out.push_back(a.at(i) + b.at(i));
    Composition c(std::move(out));
    require(c.is_partition(), "termwise sum is not weakly decreasing");
    return Partition(c);
}

// lambda cup lambda = (l1,l1,l2,l2,...)
inline Partition duplicate(const Partition& p) {
    std::vector<int> out;
    out.reserve(2 * p.size());
    for (int x : p.parts()) { out.push_back(x); out.push_back(x); }
    return Partition(std::move(out));
}

inline int multiplicity(const Partition& p, int a) {
    require(a >= 1, "multiplicity counts positive parts");
    return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), a));
}

// Multiplicity of the largest part; k(empty) is infinite.
struct HeadMultiplicity {
    bool infinite = false;
    int count = 0;
    friend bool operator==(const HeadMultiplicity&, const HeadMultiplicity&) = default;
};

inline HeadMultiplicity head_multiplicity(const Partition& p) {
    if (p.empty()) return {true, 0};
    return {false, multiplicity(p, p.at(1))};
}

// ---------------------------------------------------------------------------
// Enumeration (deterministic order)

namespace detail {
inline void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// All partitions of n, lexicographically descending.
inline std::vector<Partition> enumerate_partitions(int n) {
    require(n >= 0, "n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::gen_partitions(n, n, cur, out);
    if (n == 0) return {Partition{}};
    return out;
}

// All bipartitions of n, sorted by interleaved composition, descending lex.
inline std::vector<Bipartition> enumerate_bipartitions(int n) {
    require(n >= 0, "n must be nonnegative");
    std::vector<Bipartition> out;
    for (int a = 0; a <= n; ++a)
        for (const Partition& m : enumerate_partitions(a))
            for (const Partition& s : enumerate_partitions(n - a))
                out.emplace_back(m, s);
    std::sort(out.begin(), out.end(), [](const Bipartition& x, const Bipartition& y) {
        return interleave(y) < interleave(x);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Distinguished sub-posets and membership predicates

// Q_n^B: mu_i >= nu_i - 2 and nu_i >= mu_{i+1} for all i.
inline bool is_B_dist(const Bipartition& bp) {
    int len = std::max(bp.mu.size(), bp.nu.size()) + 1;
    for (int i = 1; i <= len; ++i) {
        if (bp.mu.at(i) < bp.nu.at(i) - 2) return false;
        if (bp.nu.at(i) < bp.mu.at(i + 1)) return false;
    }
    return true;
}

// Q_n^C: mu_i >= nu_i - 1 and nu_i >= mu_{i+1} - 1 for all i.
inline bool is_C_dist(const Bipartition& bp) {
    int len = std::max(bp.mu.size(), bp.nu.size()) + 1;
    for (int i = 1; i <= len; ++i) {
        if (bp.mu.at(i) < bp.nu.at(i) - 1) return false;
        if (bp.nu.at(i) < bp.mu.at(i + 1) - 1) return false;
    }
    return true;
}

// Q_n^o = Q_n^B cap Q_n^C: mu_i >= nu_i - 1 and nu_i >= mu_{i+1}.
inline bool is_special(const Bipartition& bp) {
    int len = std::max(bp.mu.size(), bp.nu.size()) + 1;
    for (int i = 1; i <= len; ++i) {
        if (bp.mu.at(i) < bp.nu.at(i) - 1) return false;
        if (bp.nu.at(i) < bp.mu.at(i + 1)) return false;
    }
    return true;
}

// Q_n^{B,2}: mu_i >= nu_i - 2 for all i.
inline bool is_B2_dist(const Bipartition& bp) {
    int len = std::max(bp.mu.size(), bp.nu.size());
    for (int i = 1; i <= len; ++i)
        if (bp.mu.at(i) < bp.nu.at(i) - 2) return false;
    return true;
}

// P_{2n}^C: partitions of even weight whose odd parts have even multiplicity.
inline bool is_P2nC(const Partition& p) {
    if (p.weight() % 2 != 0) return false;
    for (int x : p.parts())
        if (x % 2 == 1 && multiplicity(p, x) % 2 != 0) return false;
    return true;
}

// P_{2n+1}^B: partitions of odd weight whose even parts have even multiplicity.
inline bool is_P2n1B(const Partition& p) {
    if (p.weight() % 2 != 1) return false;
    for (int x : p.parts())
        if (x % 2 == 0 && multiplicity(p, x) % 2 != 0) return false;
    return true;
}

// P_{2n}^dup: lambda = rho cup rho.
inline bool is_duplicated(const Partition& p) {
    if (p.size() % 2 != 0) return false;
    for (int i = 1; i <= p.size(); i += 2)
        if (p.at(i) != p.at(i + 1)) return false;
    return true;
}

// (rho;sigma) preceq (mu;nu): dominance plus equal termwise sums. Under equal
// sums this is equivalent to rho_i <= mu_i for all i; both routes are
// evaluated and compared.
inline bool preceq(const Bipartition& a, const Bipartition& b) {
    require(a.weight() == b.weight(), "preceq compares equal weights");
    bool sums_equal = add_parts(a.mu, a.nu) == add_parts(b.mu, b.nu);
    bool via_order = sums_equal && bipartition_leq(a, b);
    bool componentwise = true;
    int len = std::max(a.mu.size(), b.mu.size());
    for (int i = 1; i <= len && componentwise; ++i)
        if (a.mu.at(i) > b.mu.at(i)) componentwise = false;
    bool via_components = sums_equal && componentwise;
    check(via_order == via_components, "preceq characterizations disagree");
    return via_order;
}

}  // namespace nilpiece

template <>
struct std::hash<nilpiece::Bipartition> {
    size_t operator()(const nilpiece::Bipartition& bp) const {
        size_t h = 0x9e3779b97f4a7c15ULL;
        auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        for (int x : bp.mu.parts()) mix(static_cast<size_t>(x) * 2 + 1);
        mix(0);
        for (int x : bp.nu.parts()) mix(static_cast<size_t>(x) * 2 + 1);
        return h;
    }
};
