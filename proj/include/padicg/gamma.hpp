#pragma once

#include <vector>

#include "padicg/rational.hpp"
#include "padicg/residue.hpp"

namespace padicg {

// Batch-evaluated values of Morita's p-adic gamma function at a prescribed set
// of residues mod p^n, for one odd prime.  Built by a single forward pass
// maintaining the running product
//     value(m+1) = -m * value(m)   if p does not divide m,
//     value(m+1) = -value(m)       otherwise,
// starting from value(0) = 1, so the cost is O(max target) multiplications
// regardless of how many targets are captured.  Only the requested residues
// are stored.
class GammaTable {
public:
    GammaTable(u64 p, unsigned n_work, std::vector<u64> targets);

    const Modulus& mod() const { return mod_; }

    // Gamma value mod p^n at a captured residue (gamma is constant on residue
    // classes mod p^n, so this is the value at every x in the class).
    u64 at(u64 residue, unsigned n) const;

    // Gamma at the fractional part of r, reduced into the table's modulus.
    u64 at_frac(const Rational& r, unsigned n) const;

    bool has(u64 residue) const;

private:
    Modulus mod_;
    std::vector<u64> keys_;   // sorted residues
    std::vector<u64> vals_;
};

// Convenience single-value evaluation (runs its own sweep).
u64 gamma_p(const Rational& x, u64 p, unsigned n);

} // namespace padicg
