#include "padicg/hypergeom_f.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace padicg {

CharTuple::CharTuple(std::vector<unsigned> up, std::vector<unsigned> lo, u64 p)
    : upper(std::move(up)), lower(std::move(lo)) {
    if (upper.size() != lower.size() + 1 || lower.empty())
        throw std::invalid_argument("CharTuple: need n+1 upper and n >= 1 lower characters");
    for (auto& j : upper) j = static_cast<unsigned>(j % (p - 1));
    for (auto& j : lower) j = static_cast<unsigned>(j % (p - 1));
}

GParams CharTuple::to_g_params(u64 p) const {
    std::vector<Rational> a, b;
    for (unsigned j : upper) a.emplace_back(static_cast<i64>(j), static_cast<i64>(p - 1));
    b.emplace_back(0);
    for (unsigned j : lower) b.emplace_back(static_cast<i64>(j), static_cast<i64>(p - 1));
    return GParams(std::move(a), std::move(b));
}

u64 character_order(unsigned j, u64 p) {
    return (p - 1) / std::gcd<u64>(j, p - 1);
}

unsigned character_index_of_power(u64 p, u64 order, u64 k) {
    if ((p - 1) % order != 0)
        throw WrongCongruenceClass("character order does not divide p - 1");
    u64 e = (p - 1) / order * (k % order);         // omega-exponent
    return static_cast<unsigned>((p - 1 - e) % (p - 1));  // omega-bar index
}

namespace {

struct Term {
    i64 q;     // power of p
    u64 coeff; // unit coefficient
    unsigned r;
};

// Walks the character sum, emitting per-term (pi-degree, coefficient).  The
// degree walk is also used standalone to size the working precision.
template <typename Emit>
void for_each_term(const CharTuple& chars, u64 p, const GaussTable* table, u64 x,
                   Emit&& emit) {
    const i64 pm1 = static_cast<i64>(p - 1);
    const unsigned n = chars.n();
    auto canon = [&](i64 e) { return static_cast<unsigned>(((e % pm1) + pm1) % pm1); };

    const Modulus* m = table ? &table->mod() : nullptr;
    u64 chi_x = 1, w = 0;
    if (table) w = teichmuller(x, p, m->n);

    for (i64 s = 0; s < pm1; ++s) {
        i64 deg = 0;
        u64 coeff = 1;
        bool negate = false;
        auto mul_gauss = [&](unsigned j) {
            deg += static_cast<i64>(j);
            if (table) { coeff = m->mul(coeff, table->gamma_of_index(j)); negate = !negate; }
        };
        auto mul_gauss_inv = [&](unsigned j) {
            if (j == 0) { negate = !negate; return; }
            deg -= static_cast<i64>(j);
            if (table) {
                coeff = m->mul(coeff, table->gamma_of_index(static_cast<unsigned>(pm1 - j)));
                if (j & 1) negate = !negate;
            }
        };
        for (unsigned i = 0; i <= n; ++i) {        // g(A_i chi) / g(A_i)
            mul_gauss(canon(static_cast<i64>(chars.upper[i]) - s));
            mul_gauss_inv(chars.upper[i]);
        }
        for (unsigned k = 0; k < n; ++k) {         // g(B_k-bar chi-bar) / g(B_k-bar)
            mul_gauss(canon(s - static_cast<i64>(chars.lower[k])));
            mul_gauss_inv(canon(-static_cast<i64>(chars.lower[k])));
        }
        mul_gauss(static_cast<unsigned>(s));       // g(chi-bar)
        if (table) {
            // chi(-1)^{n+1} chi(x) with chi = omega^s
            if ((static_cast<u64>(s) * (n + 1)) & 1) negate = !negate;
            coeff = m->mul(coeff, chi_x);
            if (negate) coeff = m->neg(coeff);
        }
        unsigned r = canon(deg);
        i64 q = (deg - static_cast<i64>(r)) / pm1;
        // fold the sign of pi^{q(p-1)} = (-p)^q
        if (table && (q & 1)) coeff = m->neg(coeff);
        emit(Term{q, coeff, r});
        if (table) chi_x = m->mul(chi_x, w);
    }
}

} // namespace

unsigned f_eval_work_precision(const CharTuple& chars, u64 p, unsigned n_target) {
    i64 q0 = 0;
    for_each_term(chars, p, nullptr, 1, [&](const Term& t) {
        if (t.r == 0) q0 = std::min(q0, t.q);
    });
    return n_target + static_cast<unsigned>(-q0) + 1;
}

PadicNumber f_eval(const CharTuple& chars, u64 x, const GaussTable& table, unsigned n_target) {
    const u64 p = table.prime();
    if (!is_odd_prime(p)) throw EvenPrime("f_eval: p must be an odd prime");
    x %= p;
    if (x == 0) return PadicNumber::zero(p);

    const Modulus& m = table.mod();
    const unsigned nw = m.n;
    const u64 pm1 = p - 1;

    // two passes: first the minimal p-power per bucket, then aligned sums
    std::vector<i64> qmin(pm1, 0);
    for_each_term(chars, p, nullptr, x, [&](const Term& t) {
        qmin[t.r] = std::min(qmin[t.r], t.q);
    });
    std::vector<u64> bucket(pm1, 0);
    for_each_term(chars, p, &table, x, [&](const Term& t) {
        u64 c = t.coeff;
        for (i64 k = t.q - qmin[t.r]; k > 0; --k) c = m.mul(c, p);
        bucket[t.r] = m.add(bucket[t.r], c);
    });

    for (unsigned r = 1; r < pm1; ++r)
        if (bucket[r] != 0)
            throw NonRationalResult("f_eval: pi-coordinates failed to cancel");

    if (static_cast<i64>(nw) + qmin[0] < static_cast<i64>(n_target))
        throw Error("f_eval: working precision too small for requested digits");

    PadicNumber sum = PadicNumber::from_residue(bucket[0], p, nw, qmin[0]);
    return sum.scaled_by_unit(m.inv(pm1 % m.pn), nw);
}

PadicNumber f_eval(const CharTuple& chars, u64 x, u64 p, unsigned n_target) {
    GaussTable table(p, f_eval_work_precision(chars, p, n_target));
    return f_eval(chars, x, table, n_target);
}

LennonTrace lennon_trace(u64 a, u64 b, u64 p, unsigned n_target) {
    if (!is_prime(p) || p % 12 != 1)
        throw WrongCongruenceClass("lennon_trace: requires a prime p = 1 (mod 12)");
    a %= p; b %= p;
    if (a == 0) throw ExcludedJInvariant("lennon_trace: j = 0 (a = 0) excluded");
    if (b == 0) throw ExcludedJInvariant("lennon_trace: j = 1728 (b = 0) excluded");
    u64 a3 = mul_mod(a, mul_mod(a, a, p), p);
    u64 disc = (4 * a3 + 27 * mul_mod(b, b, p)) % p;
    if (disc == 0) throw SingularCurve("lennon_trace: singular curve");

    // x = (4a^3 + 27b^2) / 4a^3, the prefactor argument is -a^3/27
    u64 four_a3 = mul_mod(4 % p, a3, p);
    u64 x = mul_mod(disc, inv_mod(four_a3, p), p);
    u64 z = mul_mod(p - a3 % p, inv_mod(27 % p, p), p);

    static constexpr std::array<u64, 4> kUnits = {1, 5, 7, 11};
    LennonTrace out{};
    const u64 bound = isqrt(4 * p);
    for (std::size_t i = 0; i < kUnits.size(); ++i) {
        unsigned psi = character_index_of_power(p, 12, kUnits[i]);
        unsigned psi5 = character_index_of_power(p, 12, 5 * kUnits[i]);
        CharTuple chars({psi, psi5}, {0}, p);
        unsigned nw = f_eval_work_precision(chars, p, n_target);
        GaussTable table(p, nw);
        PadicNumber f = f_eval(chars, x, table, n_target);
        // psi^3(z): omega-bar exponent 3*psi
        u64 e = (3ULL * psi) % (p - 1);
        u64 w = table.mod().inv(teichmuller(z, p, nw));
        PadicNumber value = f.is_zero() ? f : f.scaled_by_unit(table.mod().pow(w, e), nw);
        out.by_character[i] = centered_lift(value, bound);
    }
    out.ap = out.by_character[0];
    return out;
}

PadicNumber f4_modular(u64 p, unsigned n_target) {
    if (!is_prime(p) || p % 5 != 1)
        throw WrongCongruenceClass("f4_modular: requires a prime p = 1 (mod 5)");
    std::vector<unsigned> upper;
    for (u64 k = 1; k <= 4; ++k) upper.push_back(character_index_of_power(p, 5, k));
    CharTuple chars(std::move(upper), {0, 0, 0}, p);
    return f_eval(chars, 1, p, n_target);
}

} // namespace padicg
