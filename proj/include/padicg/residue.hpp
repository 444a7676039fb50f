#pragma once

#include <cstdint>
#include <vector>

#include "padicg/errors.hpp"

namespace padicg {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m);

// Inverse of a mod m via extended Euclid; throws Error if gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

bool is_prime(u64 n);
bool is_odd_prime(u64 n);

// Largest v with p^v | x (x != 0).
unsigned valuation_of(u64 x, u64 p);

u64 isqrt(u64 n);

// Fixed prime power p^n used as the working modulus for unit arithmetic.
// Kept below 2^62 so sums of two residues and 128-bit products are exact.
struct Modulus {
    u64 p = 0;
    unsigned n = 0;
    u64 pn = 1;

    Modulus() = default;
    Modulus(u64 prime, unsigned prec);

    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= pn ? s - pn : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (pn - b); }
    u64 neg(u64 a) const { return a == 0 ? 0 : pn - a; }
    u64 mul(u64 a, u64 b) const { return mul_mod(a, b, pn); }
    u64 pow(u64 base, u64 exp) const { return pow_mod(base % pn, exp, pn); }
    u64 inv(u64 a) const { return inv_mod(a % pn, pn); }
    u64 reduce_signed(i64 x) const {
        i64 r = x % static_cast<i64>(pn);
        return r < 0 ? static_cast<u64>(r + static_cast<i64>(pn)) : static_cast<u64>(r);
    }
    // a mod p^k for k <= n
    u64 truncate(u64 a, unsigned k) const;
};

std::vector<u64> primes_in_range(u64 lo, u64 hi);

} // namespace padicg
