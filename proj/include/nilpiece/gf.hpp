#pragma once

// Small finite fields F_q for q in {2,3,4,5,8,9}, with fixed reduction
// polynomials so outputs are reproducible: F_4 = F_2[x]/(x^2+x+1),
// F_8 = F_2[x]/(x^3+x+1), F_9 = F_3[x]/(x^2+1). Elements are indices
// 0..q-1 whose base-p digits are the polynomial coefficients; all
// arithmetic goes through precomputed tables.

#include <array>
#include <cstdint>
#include <vector>

#include "nilpiece/partitions.hpp"

namespace nilpiece::fq {

class Field {
public:
    static const Field& gf(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return s_; }
    bool char2() const { return p_ == 2; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const {
        require(a != 0, "zero has no inverse");
        return inv_[a];
    }
    uint8_t frobenius(uint8_t a) const { return frob_[a]; }

    // The unique square root in characteristic 2: a^(2^(s-1)).
    uint8_t sqrt2(uint8_t a) const {
        require(char2(), "frobenius square roots need characteristic 2");
        return sqrt_[a];
    }

private:
    Field(int p, int s, std::vector<int> reduction);

    int p_, s_, q_;
    std::vector<uint8_t> add_, mul_;
    std::array<uint8_t, 16> neg_{}, inv_{}, frob_{}, sqrt_{};
};

inline Field::Field(int p, int s, std::vector<int> reduction) : p_(p), s_(s) {
    q_ = 1;
    for (int i = 0; i < s; ++i) q_ *= p;
    check(q_ <= 16, "field too large for table representation");

    auto to_digits = [&](int v) {
        std::vector<int> d(s_);
        for (int i = 0; i < s_; ++i) {
            d[i] = v % p_;
            v /= p_;
        }
        return d;
    };
    auto from_digits = [&](const std::vector<int>& d) {
        int v = 0;
        for (int i = s_ - 1; i >= 0; --i) v = v * p_ + d[i];
        return v;
    };

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (int a = 0; a < q_; ++a) {
        auto da = to_digits(a);
        for (int b = 0; b < q_; ++b) {
            auto db = to_digits(b);
            std::vector<int> sum(s_);
            for (int i = 0; i < s_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = static_cast<uint8_t>(from_digits(sum));

            std::vector<int> prod(2 * s_ - 1, 0);
            for (int i = 0; i < s_; ++i)
                for (int j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            // reduce modulo the monic reduction polynomial
            for (int k = 2 * s_ - 2; k >= s_; --k) {
                int c = prod[k];
                if (c == 0) continue;
                prod[k] = 0;
                for (int i = 0; i < s_; ++i)
                    prod[k - s_ + i] = ((prod[k - s_ + i] - c * reduction[i]) % p_ + p_ * p_) % p_;
            }
            prod.resize(s_);
            mul_[a * q_ + b] = static_cast<uint8_t>(from_digits(prod));
        }
    }
    for (int a = 0; a < q_; ++a) {
        auto da = to_digits(a);
        for (int& d : da) d = (p_ - d) % p_;
        neg_[a] = static_cast<uint8_t>(from_digits(da));
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) inv_[a] = static_cast<uint8_t>(b);
    for (int a = 0; a < q_; ++a) {
        uint8_t f = static_cast<uint8_t>(a);
        for (int i = 1; i < p_; ++i) f = mul(f, static_cast<uint8_t>(a));
        frob_[a] = f;
    }
    if (p_ == 2)
        for (int a = 0; a < q_; ++a) {
            uint8_t r = static_cast<uint8_t>(a);
            for (int i = 0; i < s_ - 1; ++i) r = mul(r, r);
            sqrt_[a] = r;
            check(mul(r, r) == a, "square root table");
        }
}

inline const Field& Field::gf(int q) {
    static const Field f2(2, 1, {});
    static const Field f3(3, 1, {});
    static const Field f4(2, 2, {1, 1});      // x^2 + x + 1
    static const Field f5(5, 1, {});
    static const Field f8(2, 3, {1, 1, 0});   // x^3 + x + 1
    static const Field f9(3, 2, {1, 0});      // x^2 + 1
    switch (q) {
        case 2: return f2;
        case 3: return f3;
        case 4: return f4;
        case 5: return f5;
        case 8: return f8;
        case 9: return f9;
        default: throw std::invalid_argument("unsupported field size");
    }
}

inline uint8_t frobenius_sqrt(const Field& F, uint8_t a) { return F.sqrt2(a); }

}  // namespace nilpiece::fq
