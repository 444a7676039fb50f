#pragma once

#include <array>
#include <vector>

#include "padicg/hypergeom_g.hpp"
#include "padicg/padic.hpp"
#include "padicg/pi_ring.hpp"

namespace padicg {

// Character data of the finite-field hypergeometric sum: n+1 upper and n lower
// characters, each stored as the exponent j of omega-bar (so the character is
// omega-bar^j), canonical in [0, p-2].
struct CharTuple {
    std::vector<unsigned> upper;
    std::vector<unsigned> lower;

    CharTuple(std::vector<unsigned> up, std::vector<unsigned> lo, u64 p);

    unsigned n() const { return static_cast<unsigned>(lower.size()); }
    // Parameter vectors of the equivalent character sum built from gamma
    // quotients: a_i = upper_i/(p-1), lower row gains a leading 0.
    GParams to_g_params(u64 p) const;
};

// Order of omega-bar^j in the character group.
u64 character_order(unsigned j, u64 p);

// omega-bar index of omega^{(p-1)/order * k}; requires order | p-1.
unsigned character_index_of_power(u64 p, u64 order, u64 k);

// The normalized hypergeometric character sum over F_p,
//   (p-1)^{-1} sum_chi prod_i g(A_i chi)/g(A_i) prod_k g(B_k-bar chi-bar)/g(B_k-bar)
//              * g(chi-bar) chi(-1)^{n+1} chi(x),
// evaluated through Gauss-sum monomials in the pi-ring.  Every term is a
// monomial c * pi^d with d an arbitrary integer; terms are bucketed by residue
// degree with exact powers of p, the nonzero buckets must cancel (the value
// lies in Q_p), and bucket 0 is returned as a PadicNumber.
PadicNumber f_eval(const CharTuple& chars, u64 x, const GaussTable& table, unsigned n_target);
PadicNumber f_eval(const CharTuple& chars, u64 x, u64 p, unsigned n_target);

// Working precision sufficient for n_target digits of the bucket-0 value.
unsigned f_eval_work_precision(const CharTuple& chars, u64 p, unsigned n_target);

struct LennonTrace {
    i64 ap;                       // from the canonical order-12 character
    std::array<i64, 4> by_character;  // psi = omega^{k(p-1)/12}, k in {1,5,7,11}
};

// Trace of Frobenius of y^2 = x^3 + ax + b for p = 1 (mod 12) via the
// hypergeometric evaluation with an order-12 character.  All four order-12
// characters are evaluated and reported.
LennonTrace lennon_trace(u64 a, u64 b, u64 p, unsigned n_target);

// The order-5 character sum 4F3(chi5, chi5^2, chi5^3, chi5^4; eps, eps, eps | 1)
// for p = 1 (mod 5); the caller compares value - p against the cusp-form
// coefficient c(p).
PadicNumber f4_modular(u64 p, unsigned n_target);

} // namespace padicg
