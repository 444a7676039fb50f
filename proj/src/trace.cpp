#include "padicg/trace.hpp"

#include <stdexcept>

#include "padicg/padic.hpp"

namespace padicg {

TraceEvaluator::TraceEvaluator(u64 p, unsigned n_target)
    : g_(trace_parameters(), p, n_target), n_target_(n_target) {
    if (p <= 3) throw std::invalid_argument("TraceEvaluator: requires p > 3");
}

i64 TraceEvaluator::lift(const PadicNumber& value, int sign) const {
    const u64 p = g_.prime();
    PadicNumber ap = p_scaled(value);
    if (sign < 0) ap = -ap;
    return centered_lift(ap, isqrt(4 * p));
}

// phi * p * G with the p-integrality of the product made explicit
PadicNumber TraceEvaluator::p_scaled(const PadicNumber& g) const {
    PadicNumber ap = g.shifted(1);
    if (!ap.is_zero() && ap.valuation() < 0)
        throw Error("trace: p * G is not integral");
    return ap;
}

i64 TraceEvaluator::trace_short(u64 a, u64 b) const {
    const u64 p = g_.prime();
    a %= p; b %= p;
    if (a == 0) throw ExcludedJInvariant("trace: j = 0 (a = 0) excluded");
    if (b == 0) throw ExcludedJInvariant("trace: j = 1728 (b = 0) excluded");
    u64 a3 = mul_mod(a, mul_mod(a, a, p), p);
    u64 num = mul_mod(27 % p, mul_mod(b, b, p), p);
    u64 den = mul_mod(4 % p, a3, p);
    if ((num + den) % p == 0) throw SingularCurve("trace: singular curve");
    u64 t = mul_mod(p - num, inv_mod(den, p), p);  // -27 b^2 / 4 a^3
    GValue gv = g_.eval(t);
    return lift(gv.value, legendre(b, p));
}

i64 TraceEvaluator::trace_general(const WeierstrassCurve& e) const {
    const u64 p = g_.prime();
    if (e.p != p) throw MixedRings("trace: curve prime differs from evaluator prime");
    CurveInvariants inv = invariants(e);
    if (!inv.j) throw SingularCurve("trace: singular curve");
    if (*inv.j == 0 || *inv.j == 1728 % p)
        throw ExcludedJInvariant("trace: j in {0, 1728} excluded");
    u64 t = (1 + p - mul_mod(1728 % p, inv_mod(*inv.j, p), p)) % p;  // 1 - 1728/j
    int sign = legendre(mul_mod(p - 6 % p, inv.c6, p), p);           // phi(-6 c6)
    GValue gv = g_.eval(t);
    return lift(gv.value, sign);
}

i64 trace_via_g(u64 a, u64 b, u64 p, unsigned n_target) {
    return TraceEvaluator(p, n_target).trace_short(a, b);
}

i64 trace_via_c6(const WeierstrassCurve& e, unsigned n_target) {
    return TraceEvaluator(e.p, n_target).trace_general(e);
}

A3Result a3_special(u64 a, u64 b, unsigned n_target) {
    a %= 3; b %= 3;
    if (a == 0 || b == 0)
        throw std::invalid_argument("a3_special: a and b must be nonzero mod 3");
    WeierstrassCurve e{3, 0, a, 0, 0, b};
    i64 enumerated = ap_enumerate(e);

    u64 t = mul_mod(3 - a, inv_mod(b, 3), 3);  // -a/b
    GValue gv = g_eval(char3_parameters(), t, 3, n_target);
    i64 formula = centered_lift(gv.value, isqrt(12));
    if (legendre(a, 3) < 0) formula = -formula;
    return A3Result{enumerated, formula};
}

} // namespace padicg
