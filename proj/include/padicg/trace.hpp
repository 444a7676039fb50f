#pragma once

#include "padicg/elliptic.hpp"
#include "padicg/hypergeom_g.hpp"

namespace padicg {

// Trace-of-Frobenius evaluations through the character sum built from gamma
// quotients.  The per-prime gamma sweep is shared across curves, so prefer one
// TraceEvaluator per prime when walking curve families.
class TraceEvaluator {
public:
    TraceEvaluator(u64 p, unsigned n_target);

    u64 prime() const { return g_.prime(); }

    // a_p of y^2 = x^3 + ax + b, via  phi(b) * p * G(-27 b^2 / 4a^3).
    i64 trace_short(u64 a, u64 b) const;

    // Model-independent form for a general Weierstrass curve, via
    //   phi(-6 c6) * p * G(1 - 1728/j).
    i64 trace_general(const WeierstrassCurve& e) const;

    // The underlying character-sum value at argument t.
    GValue g2(u64 t) const { return g_.eval(t); }

private:
    i64 lift(const PadicNumber& value, int sign) const;
    PadicNumber p_scaled(const PadicNumber& g) const;

    GEvaluator g_;
    unsigned n_target_;
};

i64 trace_via_g(u64 a, u64 b, u64 p, unsigned n_target);
i64 trace_via_c6(const WeierstrassCurve& e, unsigned n_target);

// Characteristic-3 companion formula: for y^2 = x^3 + a x^2 + b over F_3 with
// a, b nonzero, the trace equals phi(a) * G(-a/b) for the (0,0;0,1/2)
// parameters at p = 3.  Returns both the enumeration value and the formula
// value so callers can assert agreement.
struct A3Result {
    i64 enumerated;
    i64 formula;
};
A3Result a3_special(u64 a, u64 b, unsigned n_target = 2);

} // namespace padicg
