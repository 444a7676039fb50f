#include "padicg/pi_ring.hpp"

#include <stdexcept>

namespace padicg {

PiRingElement::PiRingElement(u64 p, unsigned n) : mod_(p, n), c_(p - 1, 0) {
    if (!is_odd_prime(p)) throw std::invalid_argument("PiRingElement: p must be an odd prime");
}

PiRingElement PiRingElement::scalar(u64 p, unsigned n, u64 value) {
    PiRingElement e(p, n);
    e.c_[0] = value % e.mod_.pn;
    return e;
}

PiRingElement PiRingElement::monomial(u64 p, unsigned n, unsigned degree, u64 coeff) {
    if (degree >= p - 1) throw IndexOutOfRange("PiRingElement: monomial degree out of range");
    PiRingElement e(p, n);
    e.c_[degree] = coeff % e.mod_.pn;
    return e;
}

void PiRingElement::check_same(const PiRingElement& o) const {
    if (mod_.p != o.mod_.p || mod_.n != o.mod_.n)
        throw MixedRings("PiRingElement: operands from different rings");
}

PiRingElement PiRingElement::operator+(const PiRingElement& o) const {
    check_same(o);
    PiRingElement r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = mod_.add(r.c_[k], o.c_[k]);
    return r;
}

PiRingElement PiRingElement::operator-(const PiRingElement& o) const {
    check_same(o);
    PiRingElement r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = mod_.sub(r.c_[k], o.c_[k]);
    return r;
}

PiRingElement PiRingElement::operator-() const {
    PiRingElement r = *this;
    for (auto& v : r.c_) v = mod_.neg(v);
    return r;
}

PiRingElement PiRingElement::scaled(u64 scalar) const {
    PiRingElement r = *this;
    scalar %= mod_.pn;
    for (auto& v : r.c_) v = mod_.mul(v, scalar);
    return r;
}

PiRingElement PiRingElement::operator*(const PiRingElement& o) const {
    check_same(o);
    const std::size_t d = c_.size();  // p - 1
    PiRingElement r(mod_.p, mod_.n);
    u64 minus_p = mod_.pn - mod_.p % mod_.pn;
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            u64 prod = mod_.mul(c_[i], o.c_[j]);
            std::size_t k = i + j;
            if (k >= d) {  // pi^{p-1} = -p
                k -= d;
                prod = mod_.mul(prod, minus_p);
            }
            r.c_[k] = mod_.add(r.c_[k], prod);
        }
    }
    return r;
}

bool PiRingElement::operator==(const PiRingElement& o) const {
    return mod_.p == o.mod_.p && mod_.n == o.mod_.n && c_ == o.c_;
}

bool PiRingElement::equal_mod(const PiRingElement& o, unsigned k) const {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (mod_.truncate(c_[i], k) != mod_.truncate(o.c_[i], k)) return false;
    return true;
}

bool PiRingElement::is_rational(unsigned k) const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (mod_.truncate(c_[i], k) != 0) return false;
    return true;
}

std::string PiRingElement::str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(c_[i]);
        if (i > 0) s += "*pi^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

PiRingElement ring_mul(const PiRingElement& x, const PiRingElement& y) { return x * y; }

GaussTable::GaussTable(u64 p, unsigned n_work) : mod_(p, n_work) {
    std::vector<u64> targets;
    targets.reserve(p - 1);
    for (u64 j = 0; j < p - 1; ++j)
        targets.push_back(reduce_rational(Rational(static_cast<i64>(j), static_cast<i64>(p - 1)), mod_));
    GammaTable table(p, n_work, targets);
    gamma_.resize(p - 1);
    for (u64 j = 0; j < p - 1; ++j)
        gamma_[j] = table.at(targets[j], n_work);
}

u64 GaussTable::gamma_of_index(unsigned j) const {
    if (j >= gamma_.size()) throw IndexOutOfRange("GaussTable: index out of range");
    return gamma_[j];
}

PiMonomial GaussTable::gauss_monomial(unsigned j) const {
    return PiMonomial{static_cast<i64>(j), mod_.neg(gamma_of_index(j))};
}

PiMonomial GaussTable::gauss_inverse_monomial(unsigned j) const {
    // from the product rule g(chi) g(chi-bar) = chi(-1) p for chi != eps:
    //   1/g(omega-bar^j) = (-1)^j pi^{-j} Gamma_p((p-1-j)/(p-1));   1/g(eps) = -1
    if (j == 0) return PiMonomial{0, mod_.neg(1)};
    u64 c = gamma_of_index(static_cast<unsigned>(mod_.p - 1 - j));
    return PiMonomial{-static_cast<i64>(j), (j & 1) ? mod_.neg(c) : c};
}

PiRingElement GaussTable::gauss_sum(unsigned j) const {
    if (j >= mod_.p - 1) throw IndexOutOfRange("GaussTable: index out of range");
    return PiRingElement::monomial(mod_.p, mod_.n, j, mod_.neg(gamma_of_index(j)));
}

PiRingElement gauss_sum_gk(unsigned j, const GaussTable& table) { return table.gauss_sum(j); }

PiRingElement theta_reconstruct(u64 x, const GaussTable& table) {
    const u64 p = table.prime();
    const Modulus& m = table.mod();
    x %= p;
    if (x == 0) return PiRingElement::scalar(p, m.n, 1);
    PiRingElement out(p, m.n);
    u64 w = teichmuller(x, p, m.n);
    u64 inv_pm1 = m.inv((p - 1) % m.pn);
    u64 chi = 1;  // omega^j(x)
    for (unsigned j = 0; j < p - 1; ++j) {
        // g(omega-bar^j) * omega^j(x) / (p-1), a monomial of degree j
        u64 c = m.mul(m.neg(table.gamma_of_index(j)), m.mul(chi, inv_pm1));
        out = out + PiRingElement::monomial(p, m.n, j, c);
        chi = m.mul(chi, w);
    }
    return out;
}

i64 point_count_via_theta(unsigned nvars, const std::function<u64(u64, u64)>& f,
                          u64 p, unsigned n_target) {
    if (nvars < 1 || nvars > 2)
        throw std::invalid_argument("point_count_via_theta: one or two variables");
    unsigned n_work = n_target + 2;
    GaussTable table(p, n_work);
    const Modulus& m = table.mod();

    std::vector<PiRingElement> theta;
    theta.reserve(p);
    for (u64 r = 0; r < p; ++r) theta.push_back(theta_reconstruct(r, table));

    PiRingElement total(p, n_work);
    for (u64 y = 1; y < p; ++y)
        for (u64 x1 = 0; x1 < p; ++x1) {
            if (nvars == 1) {
                total = total + theta[mul_mod(y, f(x1, 0) % p, p)];
            } else {
                for (u64 x2 = 0; x2 < p; ++x2)
                    total = total + theta[mul_mod(y, f(x1, x2) % p, p)];
            }
        }

    if (!total.is_rational(n_work))
        throw NonRationalResult("point_count_via_theta: pi-coordinates failed to cancel");

    u64 pk = 1;  // p^nvars mod p^{n_work}
    for (unsigned i = 0; i < nvars; ++i) pk = m.mul(pk, p);
    u64 r0 = m.add(total.coeff(0), pk);
    if (r0 % p != 0)
        throw NonRationalResult("point_count_via_theta: total not divisible by p");
    // one digit is spent dividing by p
    Modulus md(p, n_work - 1);
    u64 np_mod = (r0 / p) % md.pn;
    u64 bound = 1;
    for (unsigned i = 0; i < nvars; ++i) bound *= p;  // N_p <= p^nvars
    i64 np = centered_lift_residue(np_mod, bound, md);
    if (np < 0) throw NonRationalResult("point_count_via_theta: negative count");
    return np;
}

i64 ap_via_gauss(u64 a, u64 b, u64 p, unsigned n_target) {
    if (!is_odd_prime(p) || p <= 3)
        throw std::invalid_argument("ap_via_gauss: need a prime p > 3");
    a %= p;
    b %= p;
    if (a == 0) throw ExcludedJInvariant("ap_via_gauss: j = 0 (a = 0) excluded");
    if (b == 0) throw ExcludedJInvariant("ap_via_gauss: j = 1728 (b = 0) excluded");
    u64 disc = (4 * mul_mod(a, mul_mod(a, a, p), p) + 27 * mul_mod(b, b, p)) % p;
    if (disc == 0) throw SingularCurve("ap_via_gauss: singular curve");

    const unsigned n_work = n_target + 2;
    GaussTable table(p, n_work);
    const Modulus& m = table.mod();
    const u64 pm1 = p - 1;

    // T^j(16 b^2 / a^3) with T = omega-bar
    u64 arg = mul_mod(16 % p, mul_mod(mul_mod(b, b, p), inv_mod(mul_mod(a, mul_mod(a, a, p), p), p), p), p);
    u64 wbar = m.inv(teichmuller(arg, p, n_work));

    // p^2 * [ 1 + (1/p) sum_j g(T^-j) g(T^3j) g(T^-4j) / g(T^-2j) * T^j(arg) ],
    // with Gauss-sum inverses supplied by the product rule.  Every term lands
    // in pi-degree 0 mod (p-1); accumulate densely and check.
    PiRingElement acc(p, n_work);
    acc = acc + PiRingElement::scalar(p, n_work, m.mul(p % m.pn, p % m.pn));
    u64 chi = wbar;  // T^j(arg)
    for (u64 j = 1; j <= p - 2; ++j) {
        auto idx = [&](i64 e) { return static_cast<unsigned>(((e % static_cast<i64>(pm1)) + pm1) % pm1); };
        PiMonomial m1 = table.gauss_monomial(idx(-static_cast<i64>(j)));
        PiMonomial m2 = table.gauss_monomial(idx(3 * static_cast<i64>(j)));
        PiMonomial m3 = table.gauss_monomial(idx(-4 * static_cast<i64>(j)));
        PiMonomial m4 = table.gauss_inverse_monomial(idx(-2 * static_cast<i64>(j)));
        // chi(-1) for chi = T^{-2j} is omega(-1)^{2j} = +1, so no extra sign.
        i64 deg = m1.deg + m2.deg + m3.deg + m4.deg;
        u64 coeff = m.mul(m.mul(m1.coeff, m2.coeff), m.mul(m3.coeff, m4.coeff));
        coeff = m.mul(coeff, chi);
        // the term carries 1/p from the bracket and 1/p from the inverse (if any)
        int pdiv = (idx(-2 * static_cast<i64>(j)) == 0) ? 1 : 2;
        for (int k = 0; k < 2 - pdiv; ++k) coeff = m.mul(coeff, p);
        // fold pi^deg into explicit powers of p
        i64 r = ((deg % static_cast<i64>(pm1)) + pm1) % static_cast<i64>(pm1);
        i64 q = (deg - r) / static_cast<i64>(pm1);
        if (q < 0) throw Error("ap_via_gauss: unexpected negative pi-degree");
        for (i64 k = 0; k < q; ++k) coeff = m.mul(coeff, m.pn - p % m.pn);
        acc = acc + PiRingElement::monomial(p, n_work, static_cast<unsigned>(r), coeff);
        chi = m.mul(chi, wbar);
    }

    if (!acc.is_rational(n_work))
        throw NonRationalResult("ap_via_gauss: pi-coordinates failed to cancel");
    u64 r0 = acc.coeff(0);
    if (r0 % p != 0)
        throw NonRationalResult("ap_via_gauss: bracket total not divisible by p");
    Modulus md(p, n_work - 1);
    u64 value = (r0 / p) % md.pn;
    // a_p = -phi(b)/(p-1) * value
    value = md.mul(value, md.inv((p - 1) % md.pn));
    bool neg = legendre(b, p) > 0;  // overall factor -phi(b)
    if (neg) value = md.neg(value);
    return centered_lift_residue(value, isqrt(4 * p), md);
}

} // namespace padicg
