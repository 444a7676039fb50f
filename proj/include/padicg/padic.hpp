#pragma once

#include <string>

#include "padicg/rational.hpp"
#include "padicg/residue.hpp"

namespace padicg {

// Element of Q_p at finite precision: value = unit * p^val with the unit a
// p-adic unit known mod p^prec.  Zero is a distinguished state carrying only a
// valuation floor (value == 0 mod p^{val}); exact zero uses an infinite floor.
// All precision loss is explicit: addition aligns operands at the smaller
// valuation and the result's precision reflects what both operands determine.
class PadicNumber {
public:
    static constexpr i64 kInfValuation = INT64_MAX / 4;

    static PadicNumber zero(u64 p);                       // exact zero
    static PadicNumber zero_mod(u64 p, i64 val_floor);    // value == 0 mod p^{val_floor}
    static PadicNumber from_unit(u64 p, unsigned prec, i64 val, u64 unit);
    static PadicNumber from_integer(i64 x, u64 p, unsigned prec);
    // value = residue * p^{shift}, residue given mod p^{prec}; strips p-powers
    // out of residue into the valuation.
    static PadicNumber from_residue(u64 residue, u64 p, unsigned prec, i64 shift = 0);

    u64 prime() const { return p_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && val_ >= kInfValuation; }
    // Exact valuation for nonzero values; for zero the known floor.
    i64 valuation() const { return val_; }
    u64 unit() const;
    unsigned precision() const { return prec_; }
    // Exponent k such that the value is determined mod p^k.
    i64 abs_precision() const { return zero_ ? val_ : val_ + static_cast<i64>(prec_); }

    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator-() const;
    PadicNumber operator*(const PadicNumber& o) const;

    // Multiply by a unit scalar known mod p^{scalar_prec}.
    PadicNumber scaled_by_unit(u64 scalar, unsigned scalar_prec) const;
    // Multiply by p^k (k may be negative).
    PadicNumber shifted(i64 k) const;
    PadicNumber truncated(unsigned prec) const;

    // Value mod p^k as an ordinary residue; requires val >= 0 and abs_precision >= k.
    u64 residue_mod(unsigned k) const;

    bool equal_mod(const PadicNumber& o, unsigned k) const;

    std::string str() const;

private:
    PadicNumber(u64 p, bool zero, i64 val, u64 unit, unsigned prec)
        : p_(p), zero_(zero), val_(val), unit_(unit), prec_(prec) {}

    u64 p_ = 0;
    bool zero_ = true;
    i64 val_ = kInfValuation;
    u64 unit_ = 0;
    unsigned prec_ = 0;
};

// The multiplicative lift: unique (p-1)-th root of unity congruent to x mod p,
// computed by iterating x -> x^p to its fixed point mod p^n; 0 maps to 0.
u64 teichmuller(u64 x, u64 p, unsigned n);

// Legendre symbol (x/p) in {-1, 0, +1}.
int legendre(u64 x, u64 p);

// Unique integer m with |m| <= bound congruent to x mod p^{abs_precision};
// requires val >= 0 and 2*bound < p^{abs_precision}.
i64 centered_lift(const PadicNumber& x, u64 bound);
i64 centered_lift_residue(u64 residue, u64 bound, const Modulus& m);

} // namespace padicg
