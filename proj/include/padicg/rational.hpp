#pragma once

#include <string>

#include "padicg/residue.hpp"

namespace padicg {

// Exact rational with reduced representation, den >= 1.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d);
    /* implicit */ Rational(i64 n) : num(n), den(1) {}

    bool is_integer() const { return den == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return Rational(-num, den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }

    std::string str() const;
    static Rational parse(const std::string& s); // "n" or "n/d"
};

struct FracFloor {
    Rational frac; // in [0, 1)
    i64 floor;
};

// Splits r = floor + frac exactly, 0 <= frac < 1.
FracFloor frac_floor(const Rational& r);

// Image of r in Z/p^n for rationals with p-free denominator.
u64 reduce_rational(const Rational& r, const Modulus& m);
u64 reduce_rational(const Rational& r, u64 p, unsigned n);

} // namespace padicg
