#include "padicg/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicg {

PadicNumber PadicNumber::zero(u64 p) { return PadicNumber(p, true, kInfValuation, 0, 0); }

PadicNumber PadicNumber::zero_mod(u64 p, i64 val_floor) {
    return PadicNumber(p, true, val_floor, 0, 0);
}

PadicNumber PadicNumber::from_unit(u64 p, unsigned prec, i64 val, u64 unit) {
    Modulus m(p, prec);
    unit %= m.pn;
    if (unit % p == 0) throw std::invalid_argument("PadicNumber: unit divisible by p");
    return PadicNumber(p, false, val, unit, prec);
}

PadicNumber PadicNumber::from_residue(u64 residue, u64 p, unsigned prec, i64 shift) {
    Modulus m(p, prec);
    residue %= m.pn;
    if (residue == 0) return zero_mod(p, shift + static_cast<i64>(prec));
    unsigned w = valuation_of(residue, p);
    u64 unit = residue;
    for (unsigned i = 0; i < w; ++i) unit /= p;
    unsigned rem = prec - w;
    return PadicNumber(p, false, shift + static_cast<i64>(w), unit % Modulus(p, rem).pn, rem);
}

PadicNumber PadicNumber::from_integer(i64 x, u64 p, unsigned prec) {
    Modulus m(p, prec);
    return from_residue(m.reduce_signed(x), p, prec, 0);
}

u64 PadicNumber::unit() const {
    if (zero_) throw Error("PadicNumber: zero has no unit");
    return unit_;
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (p_ != o.p_) throw MixedRings("PadicNumber: mixed primes");
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;

    i64 k = std::min(abs_precision(), o.abs_precision());
    i64 v = std::min({val_, o.val_, k});
    unsigned digits = static_cast<unsigned>(k - v);
    if (digits == 0) return zero_mod(p_, k);
    Modulus m(p_, digits);

    auto scaled = [&](const PadicNumber& x) -> u64 {
        if (x.zero_) return 0;
        u64 r = x.unit_ % m.pn;
        for (i64 i = 0; i < x.val_ - v; ++i) r = m.mul(r, p_);
        return r;
    };
    u64 sum = m.add(scaled(*this), scaled(o));
    return from_residue(sum, p_, digits, v);
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    return PadicNumber(p_, false, val_, Modulus(p_, prec_).neg(unit_), prec_);
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (p_ != o.p_) throw MixedRings("PadicNumber: mixed primes");
    if (zero_ || o.zero_) {
        if (is_exact_zero() || o.is_exact_zero()) return zero(p_);
        i64 floor1 = zero_ ? val_ : val_;
        i64 floor2 = o.zero_ ? o.val_ : o.val_;
        return zero_mod(p_, floor1 + floor2);
    }
    unsigned prec = std::min(prec_, o.prec_);
    Modulus m(p_, prec);
    return PadicNumber(p_, false, val_ + o.val_, m.mul(unit_ % m.pn, o.unit_ % m.pn), prec);
}

PadicNumber PadicNumber::scaled_by_unit(u64 scalar, unsigned scalar_prec) const {
    if (zero_) return *this;
    unsigned prec = std::min(prec_, scalar_prec);
    Modulus m(p_, prec);
    if (scalar % p_ == 0) throw std::invalid_argument("scaled_by_unit: scalar not a unit");
    return PadicNumber(p_, false, val_, m.mul(unit_ % m.pn, scalar % m.pn), prec);
}

PadicNumber PadicNumber::shifted(i64 k) const {
    if (is_exact_zero()) return *this;
    if (zero_) return zero_mod(p_, val_ + k);
    return PadicNumber(p_, false, val_ + k, unit_, prec_);
}

PadicNumber PadicNumber::truncated(unsigned prec) const {
    if (zero_ || prec >= prec_) return *this;
    return PadicNumber(p_, false, val_, unit_ % Modulus(p_, prec).pn, prec);
}

u64 PadicNumber::residue_mod(unsigned k) const {
    if (abs_precision() < static_cast<i64>(k))
        throw Error("PadicNumber: residue requested beyond known precision");
    if (zero_) return 0;
    if (val_ < 0) throw Error("PadicNumber: negative valuation has no integer residue");
    Modulus m(p_, k);
    u64 r = unit_ % m.pn;
    for (i64 i = 0; i < val_; ++i) r = m.mul(r, p_);
    return r;
}

bool PadicNumber::equal_mod(const PadicNumber& o, unsigned k) const {
    PadicNumber d = *this - o;
    if (d.abs_precision() < static_cast<i64>(k))
        throw Error("PadicNumber: comparison beyond known precision");
    return d.zero_ || d.val_ >= static_cast<i64>(k);
}

std::string PadicNumber::str() const {
    if (is_exact_zero()) return "0";
    if (zero_) return "O(" + std::to_string(p_) + "^" + std::to_string(val_) + ")";
    std::string s = std::to_string(unit_);
    if (val_ != 0) s += " * " + std::to_string(p_) + "^" + std::to_string(val_);
    s += " + O(" + std::to_string(p_) + "^" + std::to_string(abs_precision()) + ")";
    return s;
}

u64 teichmuller(u64 x, u64 p, unsigned n) {
    Modulus m(p, n);
    x %= p;
    if (x == 0) return 0;
    u64 y = x;
    // one extra pass past the expected n-1 rounds, until stationary
    for (unsigned i = 0; i < n + 2; ++i) {
        u64 next = m.pow(y, p);
        if (next == y) return y;
        y = next;
    }
    throw Error("teichmuller: iteration failed to stabilize");
}

int legendre(u64 x, u64 p) {
    x %= p;
    if (x == 0) return 0;
    u64 e = pow_mod(x, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

i64 centered_lift_residue(u64 residue, u64 bound, const Modulus& m) {
    if (2 * bound >= m.pn)
        throw std::invalid_argument("centered_lift: window not unique in modulus");
    residue %= m.pn;
    if (residue <= bound) return static_cast<i64>(residue);
    if (m.pn - residue <= bound) return -static_cast<i64>(m.pn - residue);
    throw NoLiftInWindow("centered_lift: no integer within the window matches");
}

i64 centered_lift(const PadicNumber& x, u64 bound) {
    i64 k = x.abs_precision();
    if (k < 1) throw Error("centered_lift: no known digits");
    if (!x.is_zero() && x.valuation() < 0)
        throw std::invalid_argument("centered_lift: negative valuation");
    // cap the modulus at what fits the working range
    unsigned kk = static_cast<unsigned>(std::min<i64>(k, 38));
    while (true) {
        try {
            Modulus m(x.prime(), kk);
            return centered_lift_residue(x.residue_mod(kk), bound, m);
        } catch (const PrecisionOverflow&) {
            --kk;
        }
    }
}

} // namespace padicg
