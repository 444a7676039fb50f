#include "padicg/gamma.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicg {

GammaTable::GammaTable(u64 p, unsigned n_work, std::vector<u64> targets)
    : mod_(p, n_work) {
    if (!is_odd_prime(p)) {
        if (p == 2) throw EvenPrime("GammaTable: p = 2 unsupported");
        throw std::invalid_argument("GammaTable: p must be an odd prime");
    }
    if (targets.empty()) throw std::invalid_argument("GammaTable: empty target set");
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    if (targets.back() >= mod_.pn)
        throw std::invalid_argument("GammaTable: target outside modulus");

    keys_ = std::move(targets);
    vals_.resize(keys_.size());

    u64 acc = 1; // value at m = 0
    std::size_t next = 0;
    if (keys_[0] == 0) vals_[next++] = acc;
    u64 max = keys_.back();
    u64 mp = 0; // m mod p, tracked without division
    for (u64 m = 1; m <= max; ++m) {
        // step from m-1 to m
        acc = (mp == 0) ? mod_.neg(acc) : mod_.mul(acc, mod_.pn - (m - 1) % mod_.pn);
        if (++mp == mod_.p) mp = 0;
        if (next < keys_.size() && keys_[next] == m) vals_[next++] = acc;
    }
}

u64 GammaTable::at(u64 residue, unsigned n) const {
    if (n > mod_.n)
        throw PrecisionExceedsTable("GammaTable: requested precision beyond sweep");
    auto it = std::lower_bound(keys_.begin(), keys_.end(), residue);
    if (it == keys_.end() || *it != residue)
        throw std::out_of_range("GammaTable: residue was not captured by the sweep");
    return mod_.truncate(vals_[it - keys_.begin()], n);
}

bool GammaTable::has(u64 residue) const {
    return std::binary_search(keys_.begin(), keys_.end(), residue);
}

u64 GammaTable::at_frac(const Rational& r, unsigned n) const {
    return at(reduce_rational(frac_floor(r).frac, mod_), n);
}

u64 gamma_p(const Rational& x, u64 p, unsigned n) {
    Modulus m(p, n);
    u64 target = reduce_rational(x, m);
    return GammaTable(p, n, {target}).at(target, n);
}

} // namespace padicg
