// Self-contained reference computations used to pin expected test values.
// Everything here works on plain integers and deliberately shares no code
// with the library under test.
#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

// --- Z2[t] as bitmasks: bit i is the coefficient of t^i ------------------

inline u64 z2x_add(u64 a, u64 b) { return a ^ b; }

inline u64 z2x_mul(u64 a, u64 b) {
    u64 r = 0;
    for (int i = 0; i < 32; ++i)
        if (b >> i & 1) r ^= a << i;
    return r;
}

inline int z2x_deg(u64 a) {
    int d = -1;
    for (int i = 0; i < 64; ++i)
        if (a >> i & 1) d = i;
    return d;
}

// remainder of a modulo a monic m
inline u64 z2x_mod(u64 a, u64 m) {
    int dm = z2x_deg(m);
    for (int d = z2x_deg(a); d >= dm; d = z2x_deg(a)) a ^= m << (d - dm);
    return a;
}

// GF(4) = Z2[t]/(t^2+t+1), elements 0..3 with bit0 = constant, bit1 = t.
inline u64 gf4_mul(u64 a, u64 b) { return z2x_mod(z2x_mul(a, b), 0b111); }

// dual numbers Z2[t]/(t^2)
inline u64 dual_mul(u64 a, u64 b) { return z2x_mod(z2x_mul(a, b), 0b100); }

// --- 2x2 matrices over Z2 as 4-bit masks, bits (m00,m01,m10,m11) ---------

inline u64 m2_get(u64 m, int i, int j) { return m >> (2 * i + j) & 1; }

inline u64 m2_mul(u64 a, u64 b) {
    u64 r = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            u64 s = 0;
            for (int l = 0; l < 2; ++l) s ^= m2_get(a, i, l) & m2_get(b, l, j);
            r |= s << (2 * i + j);
        }
    return r;
}

inline u64 m2_add(u64 a, u64 b) { return a ^ b; }

// --- generic helpers over a caller-supplied multiplication ---------------

struct SmallRing {
    u64 order;
    std::function<u64(u64, u64)> add;
    std::function<u64(u64, u64)> mul;
};

inline SmallRing zn(u64 n) {
    return {n, [n](u64 a, u64 b) { return (a + b) % n; }, [n](u64 a, u64 b) { return a * b % n; }};
}

inline std::set<u64> right_annihilator(const SmallRing& r, const std::set<u64>& xs) {
    std::set<u64> out;
    for (u64 c = 0; c < r.order; ++c) {
        bool all = true;
        for (u64 d : xs)
            if (r.mul(d, c) != 0) {
                all = false;
                break;
            }
        if (all) out.insert(c);
    }
    return out;
}

// all r(X) over nonempty X plus r(empty) = R, by direct subset enumeration
inline std::set<std::set<u64>> annihilator_sets(const SmallRing& r) {
    std::set<std::set<u64>> out;
    std::set<u64> everything;
    for (u64 c = 0; c < r.order; ++c) everything.insert(c);
    out.insert(everything);  // r(empty set)
    for (u64 mask = 1; mask < (u64(1) << r.order); ++mask) {
        std::set<u64> xs;
        for (u64 i = 0; i < r.order; ++i)
            if (mask >> i & 1) xs.insert(i);
        out.insert(right_annihilator(r, xs));
    }
    return out;
}

inline std::set<u64> idempotents(const SmallRing& r) {
    std::set<u64> out;
    for (u64 a = 0; a < r.order; ++a)
        if (r.mul(a, a) == a) out.insert(a);
    return out;
}

// Ore convolution over caller-supplied coefficient arithmetic; sigma_pow(i, a)
// applies the twist i times. Coefficients low to high.
inline std::vector<u64> skew_convolve(const SmallRing& r, const std::function<u64(int, u64)>& sigma_pow,
                                      const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = r.add(c[i + j], r.mul(a[i], sigma_pow(static_cast<int>(i), b[j])));
    return c;
}

inline bool all_zero(const std::vector<u64>& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

}  // namespace oracle
