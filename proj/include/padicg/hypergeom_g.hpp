#pragma once

#include <vector>

#include "padicg/gamma.hpp"
#include "padicg/padic.hpp"
#include "padicg/rational.hpp"

namespace padicg {

// Parameter vectors (a_1..a_n; b_1..b_n).  The value of the character sum
// depends only on the fractional parts, so parameters are canonicalized to
// [0, 1) on construction.
struct GParams {
    std::vector<Rational> upper;
    std::vector<Rational> lower;

    GParams(std::vector<Rational> a, std::vector<Rational> b);

    unsigned n() const { return static_cast<unsigned>(upper.size()); }
    // All denominators must be prime to p.
    void check_prime(u64 p) const;
    std::string str() const;
};

struct GValue {
    PadicNumber value;
    int delta;  // lower bound on the valuation, from the parameter data
    u64 prime;
    u64 t;
};

// Valuation bound: min over 0 <= j <= p-2 of
//   #{i : <a_i> < j/(p-1)} - #{i : <b_i>* <= j/(p-1)},
// where <b>* = 1 - <-b> (so <b>* = <b> for non-integers, 1 for integers).
// Computed with exact rational comparisons.
int delta_bound(const GParams& params, u64 p);

// Evaluator for one (params, p) pair at target precision n_target.  The gamma
// factors of every summand are gathered into a single sweep whose target set
// is deduplicated across all (i, j), and the per-j unit parts are precomputed,
// so evaluating at additional arguments t costs O(p) multiplications each.
//
// Working precision carries two guard digits beyond n_target; the explicit
// p-power factors of the summands (exponents can be negative) are tracked as
// exact valuations, and the j-sum is aligned at the minimal valuation before
// adding, so the guard digits are the only headroom needed.
class GEvaluator {
public:
    GEvaluator(GParams params, u64 p, unsigned n_target);

    GValue eval(u64 t) const;  // t is reduced mod p; t == 0 gives exactly 0

    const GParams& params() const { return params_; }
    int delta() const { return delta_; }
    u64 prime() const { return p_; }
    unsigned target_precision() const { return n_target_; }
    unsigned work_precision() const { return n_work_; }

private:
    GParams params_;
    u64 p_;
    unsigned n_target_;
    unsigned n_work_;
    Modulus mw_;
    int delta_;
    std::vector<u64> unit_;  // per-j unit coefficient (signs folded in)
    std::vector<int> pexp_;  // per-j exponent of p
};

GValue g_eval(const GParams& params, u64 t, u64 p, unsigned n_target);

// Fixed parameter sets used by the headline identities.
GParams trace_parameters();        // (1/4, 3/4; 1/3, 2/3)
GParams modular_g4_parameters();   // (1/5, 2/5, 3/5, 4/5; 0, 0, 0, 0)
GParams char3_parameters();        // (0, 0; 0, 1/2)

// Character-sum side of the weight-4 modular identity: value at t = 1.
GValue g4_modular(u64 p, unsigned n_target);

} // namespace padicg
