#pragma once

#include <functional>
#include <vector>

#include "padicg/gamma.hpp"
#include "padicg/padic.hpp"
#include "padicg/residue.hpp"

namespace padicg {

// Element of Z_p[pi]/(pi^{p-1} + p) as a coefficient vector mod p^n, the
// coefficient of pi^k at index k.  Multiplication is the convolution of
// coefficient vectors; a degree overflow folds back with a factor -p.
class PiRingElement {
public:
    PiRingElement(u64 p, unsigned n);  // zero
    static PiRingElement scalar(u64 p, unsigned n, u64 value);
    static PiRingElement monomial(u64 p, unsigned n, unsigned degree, u64 coeff);

    u64 prime() const { return mod_.p; }
    unsigned precision() const { return mod_.n; }
    const Modulus& mod() const { return mod_; }
    const std::vector<u64>& coeffs() const { return c_; }
    u64 coeff(unsigned k) const { return c_.at(k); }

    PiRingElement operator+(const PiRingElement& o) const;
    PiRingElement operator-(const PiRingElement& o) const;
    PiRingElement operator*(const PiRingElement& o) const;
    PiRingElement operator-() const;
    PiRingElement scaled(u64 scalar) const;

    bool operator==(const PiRingElement& o) const;
    bool equal_mod(const PiRingElement& o, unsigned k) const;

    // True when every pi-coordinate of positive degree vanishes mod p^k.
    bool is_rational(unsigned k) const;

    std::string str() const;

private:
    void check_same(const PiRingElement& o) const;

    Modulus mod_;
    std::vector<u64> c_;  // size p-1
};

PiRingElement ring_mul(const PiRingElement& x, const PiRingElement& y);

// Sparse monomial c * pi^deg with deg an arbitrary integer; negative degrees
// arise from Gauss-sum inverses.  Folding pi^{p-1} = -p moves degree into
// explicit powers of p, tracked separately by callers.
struct PiMonomial {
    i64 deg = 0;
    u64 coeff = 0;
};

// All Gauss sums of one prime at working precision, via the Gross-Koblitz
// evaluation  g(omega-bar^j) = -pi^j * Gamma_p(j/(p-1)).
class GaussTable {
public:
    GaussTable(u64 p, unsigned n_work);

    u64 prime() const { return mod_.p; }
    unsigned precision() const { return mod_.n; }
    const Modulus& mod() const { return mod_; }

    u64 gamma_of_index(unsigned j) const;  // Gamma_p(j/(p-1)) mod p^{n_work}

    PiMonomial gauss_monomial(unsigned j) const;      // g(omega-bar^j)
    PiMonomial gauss_inverse_monomial(unsigned j) const;  // 1/g(omega-bar^j)
    PiRingElement gauss_sum(unsigned j) const;        // dense form

private:
    Modulus mod_;
    std::vector<u64> gamma_;  // Gamma_p(j/(p-1)) for j = 0..p-2
};

PiRingElement gauss_sum_gk(unsigned j, const GaussTable& table);

// Additive character rebuilt from its Gauss-sum expansion,
//   theta(x) = (p-1)^{-1} sum_j g(omega-bar^j) omega^j(x)   for x != 0,
// with theta(0) := 1 so the point-count formula can sum over all arguments.
PiRingElement theta_reconstruct(u64 x, const GaussTable& table);

// Zero count N_p of f over affine n-space from the additive-character formula
//   p * N_p = p^nvars + sum_{y in F_p^*} sum_x theta(y * f(x)).
// The ring total must be rational and divisible by p; anything else signals an
// arithmetic bug.  f receives arguments already reduced mod p and must return
// a value mod p (the second argument is ignored when nvars == 1).
i64 point_count_via_theta(unsigned nvars, const std::function<u64(u64, u64)>& f,
                          u64 p, unsigned n_target);

// Trace of Frobenius of y^2 = x^3 + ax + b assembled from the Gauss-sum
// expression for the point count, evaluated entirely in the pi-ring.
i64 ap_via_gauss(u64 a, u64 b, u64 p, unsigned n_target);

} // namespace padicg
