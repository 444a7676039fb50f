#include "padicg/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace padicg {

namespace {

i64 checked_i64(__int128 v, const char* what) {
    if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
        throw std::overflow_error(std::string("Rational: overflow in ") + what);
    return static_cast<i64>(v);
}

} // namespace

Rational::Rational(i64 n, i64 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = __int128(num) * o.den + __int128(o.num) * den;
    __int128 d = __int128(den) * o.den;
    return Rational(checked_i64(n, "add"), checked_i64(d, "add"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    __int128 n = __int128(num) * o.num;
    __int128 d = __int128(den) * o.den;
    return Rational(checked_i64(n, "mul"), checked_i64(d, "mul"));
}

bool Rational::operator<(const Rational& o) const {
    return __int128(num) * o.den < __int128(o.num) * den;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(std::stoll(s), 1);
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

FracFloor frac_floor(const Rational& r) {
    i64 q = r.num / r.den;
    i64 rem = r.num % r.den;
    if (rem < 0) { rem += r.den; --q; }
    return FracFloor{Rational(rem, r.den), q};
}

u64 reduce_rational(const Rational& r, const Modulus& m) {
    if (static_cast<u64>(r.den) % m.p == 0)
        throw DenominatorDivisibleByP("reduce_rational: p divides denominator " + r.str());
    u64 n = m.reduce_signed(r.num);
    u64 d = m.reduce_signed(r.den);
    return m.mul(n, m.inv(d));
}

u64 reduce_rational(const Rational& r, u64 p, unsigned n) {
    return reduce_rational(r, Modulus(p, n));
}

} // namespace padicg
