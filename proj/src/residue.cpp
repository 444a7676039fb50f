#include "padicg/residue.hpp"

namespace padicg {

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 m) {
    a %= m;
    i64 old_r = static_cast<i64>(a), r = static_cast<i64>(m);
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
    }
    if (old_r != 1)
        throw Error("inv_mod: element not invertible");
    return old_s < 0 ? static_cast<u64>(old_s + static_cast<i64>(m)) : static_cast<u64>(old_s);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_odd_prime(u64 n) { return n != 2 && is_prime(n); }

unsigned valuation_of(u64 x, u64 p) {
    unsigned v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

Modulus::Modulus(u64 prime, unsigned prec) : p(prime), n(prec) {
    if (prec == 0) throw Error("Modulus: precision must be >= 1");
    pn = 1;
    for (unsigned i = 0; i < prec; ++i) {
        if (pn > (u64(1) << 62) / p)
            throw PrecisionOverflow("Modulus: p^n exceeds the 62-bit working range");
        pn *= p;
    }
}

u64 Modulus::truncate(u64 a, unsigned k) const {
    if (k >= n) return a;
    u64 pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    return a % pk;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

} // namespace padicg
