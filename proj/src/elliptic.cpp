#include "padicg/elliptic.hpp"

#include <stdexcept>

#include "padicg/padic.hpp"

namespace padicg {

namespace {

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p - b); }
    u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p); }
    u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
    u64 inv(u64 a) const { return inv_mod(a, p); }
    u64 of(u64 a) const { return a % p; }
    u64 smallc(u64 c) const { return c % p; }
};

} // namespace

std::string WeierstrassCurve::str() const {
    return "[" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) +
           "," + std::to_string(a4) + "," + std::to_string(a6) + "]/F_" + std::to_string(p);
}

static void compute_b(const WeierstrassCurve& e, Fp f, u64& b2, u64& b4, u64& b6, u64& b8) {
    u64 a1 = f.of(e.a1), a2 = f.of(e.a2), a3 = f.of(e.a3), a4 = f.of(e.a4), a6 = f.of(e.a6);
    b2 = f.add(f.mul(a1, a1), f.mul(4 % e.p, a2));
    b4 = f.add(f.mul(2 % e.p, a4), f.mul(a1, a3));
    b6 = f.add(f.mul(a3, a3), f.mul(4 % e.p, a6));
    b8 = f.sub(f.add(f.add(f.mul(f.mul(a1, a1), a6), f.mul(f.mul(4 % e.p, a2), a6)),
                     f.mul(a2, f.mul(a3, a3))),
               f.add(f.mul(a1, f.mul(a3, a4)), f.mul(a4, a4)));
}

u64 discriminant(const WeierstrassCurve& e) {
    Fp f{e.p};
    u64 b2, b4, b6, b8;
    compute_b(e, f, b2, b4, b6, b8);
    // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    u64 t1 = f.mul(f.mul(b2, b2), b8);
    u64 t2 = f.mul(8 % e.p, f.mul(b4, f.mul(b4, b4)));
    u64 t3 = f.mul(27 % e.p, f.mul(b6, b6));
    u64 t4 = f.mul(9 % e.p, f.mul(b2, f.mul(b4, b6)));
    return f.sub(t4, f.add(t1, f.add(t2, t3)));
}

CurveInvariants invariants(const WeierstrassCurve& e) {
    if (e.p <= 3) throw std::invalid_argument("invariants: requires p > 3");
    Fp f{e.p};
    CurveInvariants inv{};
    compute_b(e, f, inv.b2, inv.b4, inv.b6, inv.b8);
    inv.c4 = f.sub(f.mul(inv.b2, inv.b2), f.mul(24 % e.p, inv.b4));
    u64 b2cubed = f.mul(inv.b2, f.mul(inv.b2, inv.b2));
    inv.c6 = f.sub(f.add(f.mul(36 % e.p, f.mul(inv.b2, inv.b4)), f.neg(b2cubed)),
                   f.mul(216 % e.p, inv.b6));
    inv.disc = discriminant(e);
    if (inv.disc != 0) {
        u64 c4cubed = f.mul(inv.c4, f.mul(inv.c4, inv.c4));
        inv.j = f.mul(c4cubed, f.inv(inv.disc));
    }
    return inv;
}

u64 j_invariant(const WeierstrassCurve& e) {
    CurveInvariants inv = invariants(e);
    if (!inv.j) throw SingularCurve("j_invariant: curve is singular");
    return *inv.j;
}

WeierstrassCurve apply_transform(const WeierstrassCurve& e, const AdmissibleTransform& t) {
    Fp f{e.p};
    u64 u = f.of(t.u), r = f.of(t.r), s = f.of(t.s), tt = f.of(t.t);
    if (u == 0) throw ZeroU("apply_transform: u must be nonzero");
    u64 a1 = f.of(e.a1), a2 = f.of(e.a2), a3 = f.of(e.a3), a4 = f.of(e.a4), a6 = f.of(e.a6);

    u64 ui = f.inv(u);
    u64 ui2 = f.mul(ui, ui), ui3 = f.mul(ui2, ui), ui4 = f.mul(ui2, ui2), ui6 = f.mul(ui3, ui3);

    u64 na1 = f.mul(ui, f.add(a1, f.mul(2 % e.p, s)));
    u64 na2 = f.mul(ui2, f.sub(f.add(a2, f.mul(3 % e.p, r)), f.add(f.mul(s, a1), f.mul(s, s))));
    u64 na3 = f.mul(ui3, f.add(a3, f.add(f.mul(r, a1), f.mul(2 % e.p, tt))));
    u64 na4 = f.mul(ui4,
                    f.sub(f.add(f.add(a4, f.mul(2 % e.p, f.mul(r, a2))),
                                f.mul(3 % e.p, f.mul(r, r))),
                          f.add(f.add(f.mul(s, a3), f.mul(f.add(tt, f.mul(r, s)), a1)),
                                f.mul(2 % e.p, f.mul(s, tt)))));
    u64 r2 = f.mul(r, r), r3 = f.mul(r2, r);
    u64 na6 = f.mul(ui6,
                    f.sub(f.add(f.add(a6, f.mul(r, a4)), f.add(f.mul(r2, a2), r3)),
                          f.add(f.add(f.mul(tt, a3), f.mul(tt, tt)), f.mul(r, f.mul(tt, a1)))));
    return WeierstrassCurve{e.p, na1, na2, na3, na4, na6};
}

AdmissibleTransform compose(const AdmissibleTransform& t1, const AdmissibleTransform& t2) {
    // Composite of x = u1^2 x' + r1 applied first, then x' = u2^2 x'' + r2.
    return AdmissibleTransform{
        t1.u * t2.u,
        t1.r + t1.u * t1.u * t2.r,
        t1.s + t1.u * t2.s,
        t1.t + t1.u * t1.u * t2.r * t1.s + t1.u * t1.u * t1.u * t2.t,
    };
}

ShortForm to_short_form(const WeierstrassCurve& e) {
    if (e.p <= 3) throw std::invalid_argument("to_short_form: requires p > 3");
    Fp f{e.p};
    u64 half = f.inv(2 % e.p);
    // kill a1 and a3: y -> y - (a1 x + a3)/2
    AdmissibleTransform t1{1, 0, f.neg(f.mul(f.of(e.a1), half)), f.neg(f.mul(f.of(e.a3), half))};
    WeierstrassCurve mid = apply_transform(e, t1);
    // kill a2: x -> x - a2/3
    AdmissibleTransform t2{1, f.neg(f.mul(f.of(mid.a2), f.inv(3 % e.p))), 0, 0};
    WeierstrassCurve out = apply_transform(mid, t2);
    AdmissibleTransform t = compose(t1, t2);
    t.u %= e.p; t.r %= e.p; t.s %= e.p; t.t %= e.p;
    return ShortForm{out.a4, out.a6, t};
}

i64 ap_enumerate(const WeierstrassCurve& e) {
    if (discriminant(e) == 0) throw SingularCurve("ap_enumerate: curve is singular");
    Fp f{e.p};
    u64 a1 = f.of(e.a1), a2 = f.of(e.a2), a3 = f.of(e.a3), a4 = f.of(e.a4), a6 = f.of(e.a6);
    u64 count = 1;  // point at infinity
    for (u64 x = 0; x < e.p; ++x) {
        u64 rhs = f.add(f.mul(x, f.mul(x, x)),
                        f.add(f.mul(a2, f.mul(x, x)), f.add(f.mul(a4, x), a6)));
        for (u64 y = 0; y < e.p; ++y) {
            u64 lhs = f.add(f.mul(y, y), f.add(f.mul(a1, f.mul(x, y)), f.mul(a3, y)));
            if (lhs == rhs) ++count;
        }
    }
    return static_cast<i64>(e.p) + 1 - static_cast<i64>(count);
}

i64 ap_legendre_sum(u64 a, u64 b, u64 p) {
    if (p <= 3) throw std::invalid_argument("ap_legendre_sum: requires p > 3");
    Fp f{p};
    a = f.of(a); b = f.of(b);
    u64 disc = f.add(f.mul(4 % p, f.mul(a, f.mul(a, a))), f.mul(27 % p, f.mul(b, b)));
    if (disc == 0) throw SingularCurve("ap_legendre_sum: curve is singular");
    i64 sum = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 v = f.add(f.mul(x, f.mul(x, x)), f.add(f.mul(a, x), b));
        sum += legendre(v, p);
    }
    return -sum;
}

} // namespace padicg
