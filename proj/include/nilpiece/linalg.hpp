#pragma once

// Exact linear algebra over the small fields, in two representations behind
// one interface: byte matrices with table-lookup arithmetic (FqOps), and
// bit-packed rows with word-parallel reduction for F_2 (Gf2Ops), which the
// largest censuses run on. Indices in the public contracts are 1-based.

#include <array>
#include <bit>
#include <cstdint>

#include "nilpiece/gf.hpp"
#include "nilpiece/partitions.hpp"

namespace nilpiece::fq {

inline constexpr int kMaxDim = 12;

// ---------------------------------------------------------------------------
// Generic byte representation

struct FqMat {
    int n = 0;
    std::array<uint8_t, kMaxDim * kMaxDim> a{};
    uint8_t get(int i, int j) const { return a[(i - 1) * kMaxDim + (j - 1)]; }
    void set(int i, int j, uint8_t v) { a[(i - 1) * kMaxDim + (j - 1)] = v; }
    friend bool operator==(const FqMat&, const FqMat&) = default;
};

struct FqVec {
    int n = 0;
    std::array<uint8_t, kMaxDim> v{};
    uint8_t get(int i) const { return v[i - 1]; }
    void set(int i, uint8_t x) { v[i - 1] = x; }
    friend bool operator==(const FqVec&, const FqVec&) = default;
};

struct FqOps {
    using Mat = FqMat;
    using Vec = FqVec;
    using Elem = uint8_t;
    const Field* F;

    explicit FqOps(const Field& f) : F(&f) {}
    int q() const { return F->q(); }
    bool char2() const { return F->char2(); }

    Mat zero(int n) const {
        Mat m;
        m.n = n;
        return m;
    }
    Mat identity(int n) const {
        Mat m = zero(n);
        for (int i = 1; i <= n; ++i) m.set(i, i, 1);
        return m;
    }
    Vec vzero(int n) const {
        Vec v;
        v.n = n;
        return v;
    }
    static int dim(const Mat& m) { return m.n; }
    static int vdim(const Vec& v) { return v.n; }
    static Elem get(const Mat& m, int i, int j) { return m.get(i, j); }
    void set(Mat& m, int i, int j, Elem v) const { m.set(i, j, v); }
    static Elem vget(const Vec& v, int i) { return v.get(i); }
    void vset(Vec& v, int i, Elem x) const { v.set(i, x); }

    Mat add(const Mat& a, const Mat& b) const {
        Mat r = zero(a.n);
        for (int i = 1; i <= a.n; ++i)
            for (int j = 1; j <= a.n; ++j) r.set(i, j, F->add(a.get(i, j), b.get(i, j)));
        return r;
    }
    Mat mul(const Mat& a, const Mat& b) const {
        Mat r = zero(a.n);
        for (int i = 1; i <= a.n; ++i)
            for (int k = 1; k <= a.n; ++k) {
                uint8_t aik = a.get(i, k);
                if (aik == 0) continue;
                for (int j = 1; j <= a.n; ++j)
                    r.set(i, j, F->add(r.get(i, j), F->mul(aik, b.get(k, j))));
            }
        return r;
    }
    Vec apply(const Mat& a, const Vec& x) const {
        Vec r = vzero(a.n);
        for (int i = 1; i <= a.n; ++i) {
            uint8_t acc = 0;
            for (int j = 1; j <= a.n; ++j) acc = F->add(acc, F->mul(a.get(i, j), x.get(j)));
            r.set(i, acc);
        }
        return r;
    }
    bool is_zero(const Mat& a) const {
        for (int i = 1; i <= a.n; ++i)
            for (int j = 1; j <= a.n; ++j)
                if (a.get(i, j) != 0) return false;
        return true;
    }
    bool vis_zero(const Vec& v) const {
        for (int i = 1; i <= v.n; ++i)
            if (v.get(i) != 0) return false;
        return true;
    }

    int rank(Mat m) const {
        int r = 0;
        for (int col = 1; col <= m.n && r < m.n; ++col) {
            int piv = 0;
            for (int i = r + 1; i <= m.n; ++i)
                if (m.get(i, col) != 0) {
                    piv = i;
                    break;
                }
            if (!piv) continue;
            ++r;
            for (int j = 1; j <= m.n; ++j) std::swap(m.a[(piv - 1) * kMaxDim + j - 1],
                                                     m.a[(r - 1) * kMaxDim + j - 1]);
            uint8_t ip = F->inv(m.get(r, col));
            for (int j = col; j <= m.n; ++j) m.set(r, j, F->mul(ip, m.get(r, j)));
            for (int i = 1; i <= m.n; ++i) {
                if (i == r) continue;
                uint8_t f = m.get(i, col);
                if (f == 0) continue;
                for (int j = col; j <= m.n; ++j)
                    m.set(i, j, F->sub(m.get(i, j), F->mul(f, m.get(r, j))));
            }
        }
        return r;
    }

    std::vector<Vec> kernel_basis(Mat m) const {
        int n = m.n;
        std::vector<int> pivot_col;
        int r = 0;
        for (int col = 1; col <= n && r < n; ++col) {
            int piv = 0;
            for (int i = r + 1; i <= n; ++i)
                if (m.get(i, col) != 0) {
                    piv = i;
                    break;
                }
            if (!piv) continue;
            ++r;
            for (int j = 1; j <= n; ++j)
                std::swap(m.a[(piv - 1) * kMaxDim + j - 1], m.a[(r - 1) * kMaxDim + j - 1]);
            uint8_t ip = F->inv(m.get(r, col));
            for (int j = col; j <= n; ++j) m.set(r, j, F->mul(ip, m.get(r, j)));
            for (int i = 1; i <= n; ++i) {
                if (i == r) continue;
                uint8_t f = m.get(i, col);
                if (f == 0) continue;
                for (int j = col; j <= n; ++j)
                    m.set(i, j, F->sub(m.get(i, j), F->mul(f, m.get(r, j))));
            }
            pivot_col.push_back(col);
        }
        std::vector<bool> is_pivot(n + 1, false);
        for (int c : pivot_col) is_pivot[c] = true;
        std::vector<Vec> basis;
        for (int free = 1; free <= n; ++free) {
            if (is_pivot[free]) continue;
            Vec v = vzero(n);
            v.set(free, 1);
            for (int row = 0; row < static_cast<int>(pivot_col.size()); ++row)
                v.set(pivot_col[row], F->neg(m.get(row + 1, free)));
            basis.push_back(v);
        }
        return basis;
    }
};

// ---------------------------------------------------------------------------
// Bit-packed representation over F_2

struct Mat2 {
    int n = 0;
    std::array<uint16_t, kMaxDim> row{};  // row[i] bit j (0-based) = entry(i+1, j+1)
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct Gf2Ops {
    using Mat = Mat2;
    using Vec = uint32_t;  // bit i-1 = coordinate i
    using Elem = uint8_t;

    int q() const { return 2; }
    bool char2() const { return true; }

    Mat zero(int n) const {
        Mat m;
        m.n = n;
        return m;
    }
    Mat identity(int n) const {
        Mat m = zero(n);
        for (int i = 0; i < n; ++i) m.row[i] = static_cast<uint16_t>(1u << i);
        return m;
    }
    Vec vzero(int) const { return 0; }
    static int dim(const Mat& m) { return m.n; }
    static Elem get(const Mat& m, int i, int j) { return (m.row[i - 1] >> (j - 1)) & 1; }
    void set(Mat& m, int i, int j, Elem v) const {
        uint16_t bit = static_cast<uint16_t>(1u << (j - 1));
        if (v) m.row[i - 1] |= bit;
        else m.row[i - 1] &= static_cast<uint16_t>(~bit);
    }
    static Elem vget(Vec v, int i) { return (v >> (i - 1)) & 1; }
    void vset(Vec& v, int i, Elem x) const {
        uint32_t bit = 1u << (i - 1);
        if (x) v |= bit;
        else v &= ~bit;
    }

    Mat add(const Mat& a, const Mat& b) const {
        Mat r = a;
        for (int i = 0; i < a.n; ++i) r.row[i] ^= b.row[i];
        return r;
    }
    Mat mul(const Mat& a, const Mat& b) const {
        Mat r = zero(a.n);
        for (int i = 0; i < a.n; ++i) {
            uint16_t bits = a.row[i], acc = 0;
            while (bits) {
                int j = std::countr_zero(bits);
                bits &= static_cast<uint16_t>(bits - 1);
                acc ^= b.row[j];
            }
            r.row[i] = acc;
        }
        return r;
    }
    Vec apply(const Mat& a, Vec x) const {
        Vec r = 0;
        for (int i = 0; i < a.n; ++i)
            r |= static_cast<Vec>(std::popcount(static_cast<uint32_t>(a.row[i]) & x) & 1) << i;
        return r;
    }
    bool is_zero(const Mat& a) const {
        for (int i = 0; i < a.n; ++i)
            if (a.row[i]) return false;
        return true;
    }
    bool vis_zero(Vec v) const { return v == 0; }

    int rank(Mat m) const {
        int r = 0;
        for (int col = 0; col < m.n && r < m.n; ++col) {
            uint16_t bit = static_cast<uint16_t>(1u << col);
            int piv = -1;
            for (int i = r; i < m.n; ++i)
                if (m.row[i] & bit) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(m.row[piv], m.row[r]);
            for (int i = 0; i < m.n; ++i)
                if (i != r && (m.row[i] & bit)) m.row[i] ^= m.row[r];
            ++r;
        }
        return r;
    }

    std::vector<Vec> kernel_basis(Mat m) const {
        int n = m.n, r = 0;
        std::vector<int> pivot_col;
        for (int col = 0; col < n && r < n; ++col) {
            uint16_t bit = static_cast<uint16_t>(1u << col);
            int piv = -1;
            for (int i = r; i < n; ++i)
                if (m.row[i] & bit) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(m.row[piv], m.row[r]);
            for (int i = 0; i < n; ++i)
                if (i != r && (m.row[i] & bit)) m.row[i] ^= m.row[r];
            pivot_col.push_back(col);
            ++r;
        }
        uint32_t pivot_mask = 0;
        for (int c : pivot_col) pivot_mask |= 1u << c;
        std::vector<Vec> basis;
        for (int free = 0; free < n; ++free) {
            if (pivot_mask & (1u << free)) continue;
            Vec v = 1u << free;
            for (int row = 0; row < static_cast<int>(pivot_col.size()); ++row)
                if (m.row[row] & (1u << free)) v |= 1u << pivot_col[row];
            basis.push_back(v);
        }
        return basis;
    }
};

// ---------------------------------------------------------------------------
// Shared algorithms

// Powers 1, m, m^2, ..., up to and including the first zero power (or m^n).
template <class Ops>
std::vector<typename Ops::Mat> power_chain(const Ops& ops, const typename Ops::Mat& m) {
    std::vector<typename Ops::Mat> p{ops.identity(Ops::dim(m))};
    for (int k = 1; k <= Ops::dim(m); ++k) {
        p.push_back(ops.mul(p.back(), m));
        if (ops.is_zero(p.back())) break;
    }
    return p;
}

template <class Ops>
typename Ops::Mat matrix_power(const Ops& ops, const typename Ops::Mat& m, int k) {
    typename Ops::Mat r = ops.identity(Ops::dim(m));
    typename Ops::Mat base = m;
    for (; k > 0; k >>= 1) {
        if (k & 1) r = ops.mul(r, base);
        base = ops.mul(base, base);
    }
    return r;
}

// Nilpotency via repeated squaring: m^(2^ceil(log2 dim)) = 0.
template <class Ops>
bool is_nilpotent(const Ops& ops, const typename Ops::Mat& m) {
    typename Ops::Mat s = m;
    int covered = 1;
    while (true) {
        if (ops.is_zero(s)) return true;
        if (covered >= Ops::dim(m)) return false;
        s = ops.mul(s, s);
        covered *= 2;
    }
}

// Jordan type from a precomputed power chain ending in the zero matrix:
// (#parts >= k) = rank m^(k-1) - rank m^k.
template <class Ops>
Partition jordan_type_from_chain(const Ops& ops, const std::vector<typename Ops::Mat>& chain) {
    check(!chain.empty() && ops.is_zero(chain.back()), "power chain must reach zero");
    int n = Ops::dim(chain[0]);
    std::vector<int> ranks;
    for (const auto& p : chain) ranks.push_back(ops.rank(p));
    std::vector<int> parts;
    for (size_t k = 1; k < ranks.size(); ++k) {
        int count_ge_k = ranks[k - 1] - ranks[k];
        for (int i = 0; i < count_ge_k; ++i) {
            if (static_cast<int>(parts.size()) < i + 1) parts.push_back(0);
            parts[i] = static_cast<int>(k);
        }
    }
    Partition out{Composition(std::move(parts))};
    check(out.weight() == n, "jordan type weight equals the dimension");
    return out;
}

template <class Ops>
Partition jordan_type(const Ops& ops, const typename Ops::Mat& m) {
    require(is_nilpotent(ops, m), "jordan_type needs a nilpotent matrix");
    return jordan_type_from_chain(ops, power_chain(ops, m));
}

}  // namespace nilpiece::fq
