#pragma once

#include <optional>
#include <string>

#include "padicg/residue.hpp"

namespace padicg {

// Full five-coefficient Weierstrass model over F_p,
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
// The short form is derived from it, not the other way around.
struct WeierstrassCurve {
    u64 p;
    u64 a1, a2, a3, a4, a6;

    static WeierstrassCurve short_form(u64 p, u64 a, u64 b) {
        return WeierstrassCurve{p, 0, 0, 0, a % p, b % p};
    }
    std::string str() const;
};

struct CurveInvariants {
    u64 b2, b4, b6, b8;
    u64 c4, c6;
    u64 disc;
    std::optional<u64> j;  // defined only when disc != 0
};

// x = u^2 x' + r,  y = u^3 y' + s u^2 x' + t  with u != 0.
struct AdmissibleTransform {
    u64 u = 1, r = 0, s = 0, t = 0;
};

// Discriminant from the b-quantities; valid in every characteristic.
u64 discriminant(const WeierstrassCurve& e);

// The standard quantities b2..b8, c4, c6, disc and j; requires p > 3.
CurveInvariants invariants(const WeierstrassCurve& e);

// j-invariant; throws SingularCurve when disc = 0.
u64 j_invariant(const WeierstrassCurve& e);

WeierstrassCurve apply_transform(const WeierstrassCurve& e, const AdmissibleTransform& t);

// Result of applying t1 first, then t2.
AdmissibleTransform compose(const AdmissibleTransform& t1, const AdmissibleTransform& t2);

struct ShortForm {
    u64 a, b;
    AdmissibleTransform transform;  // applying it to the input yields y^2 = x^3 + ax + b
};

// Completes the square in y and depresses the cubic; always possible for p > 3.
ShortForm to_short_form(const WeierstrassCurve& e);

// Ground truth: projective point count by double loop over (x, y).
i64 ap_enumerate(const WeierstrassCurve& e);

// Second independent oracle: -sum_x (x^3+ax+b | p) for short curves, p > 3.
i64 ap_legendre_sum(u64 a, u64 b, u64 p);

} // namespace padicg
