#include "padicg/hypergeom_g.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicg {

GParams::GParams(std::vector<Rational> a, std::vector<Rational> b)
    : upper(std::move(a)), lower(std::move(b)) {
    if (upper.empty() || upper.size() != lower.size())
        throw std::invalid_argument("GParams: need equal, nonempty parameter rows");
    for (auto& r : upper) r = frac_floor(r).frac;
    for (auto& r : lower) r = frac_floor(r).frac;
}

void GParams::check_prime(u64 p) const {
    for (const auto& r : upper)
        if (static_cast<u64>(r.den) % p == 0)
            throw BadParameterDenominator("GParams: p divides denominator of " + r.str());
    for (const auto& r : lower)
        if (static_cast<u64>(r.den) % p == 0)
            throw BadParameterDenominator("GParams: p divides denominator of " + r.str());
}

std::string GParams::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < upper.size(); ++i)
        s += (i ? "," : "") + upper[i].str();
    s += ";";
    for (std::size_t i = 0; i < lower.size(); ++i)
        s += (i ? "," : "") + lower[i].str();
    return s + "]";
}

int delta_bound(const GParams& params, u64 p) {
    if (!is_odd_prime(p)) throw EvenPrime("delta_bound: p must be an odd prime");
    params.check_prime(p);
    i64 pm1 = static_cast<i64>(p - 1);
    int min_f = 0;
    for (i64 j = 0; j <= pm1 - 1; ++j) {
        Rational thr(j, pm1);
        int f = 0;
        for (const auto& a : params.upper)
            if (a < thr) ++f;
        for (const auto& b : params.lower) {
            Rational bstar = Rational(1) - frac_floor(-b).frac;
            if (bstar <= thr) --f;
        }
        min_f = std::min(min_f, f);
    }
    return min_f;
}

GEvaluator::GEvaluator(GParams params, u64 p, unsigned n_target)
    : params_(std::move(params)), p_(p), n_target_(n_target),
      n_work_(n_target + 2), mw_(p, n_target + 2) {
    if (!is_odd_prime(p)) throw EvenPrime("g_eval: p must be an odd prime");
    if (n_target == 0) throw std::invalid_argument("g_eval: precision must be >= 1");
    params_.check_prime(p);
    delta_ = delta_bound(params_, p);

    const unsigned n = params_.n();
    const i64 pm1 = static_cast<i64>(p - 1);

    // arguments of the gamma quotients, as exact rationals in [0, 1)
    std::vector<std::vector<Rational>> arg_a(n), arg_b(n);
    std::vector<std::vector<int>> floor_a(n), floor_b(n);
    std::vector<Rational> base_a(n), base_b(n);
    std::vector<u64> targets;
    for (unsigned i = 0; i < n; ++i) {
        base_a[i] = params_.upper[i];                      // <a_i>
        base_b[i] = frac_floor(-params_.lower[i]).frac;    // <-b_i>
        targets.push_back(reduce_rational(base_a[i], mw_));
        targets.push_back(reduce_rational(base_b[i], mw_));
        arg_a[i].reserve(p - 1);
        arg_b[i].reserve(p - 1);
        for (i64 j = 0; j < pm1; ++j) {
            Rational step(j, pm1);
            FracFloor fa = frac_floor(base_a[i] - step);
            FracFloor fb = frac_floor(base_b[i] + step);
            arg_a[i].push_back(fa.frac);
            floor_a[i].push_back(static_cast<int>(fa.floor));
            arg_b[i].push_back(fb.frac);
            floor_b[i].push_back(static_cast<int>(fb.floor));
            targets.push_back(reduce_rational(fa.frac, mw_));
            targets.push_back(reduce_rational(fb.frac, mw_));
        }
    }

    GammaTable table(p, n_work_, std::move(targets));

    std::vector<u64> inv_base(2 * n);
    for (unsigned i = 0; i < n; ++i) {
        inv_base[2 * i] = mw_.inv(table.at(reduce_rational(base_a[i], mw_), n_work_));
        inv_base[2 * i + 1] = mw_.inv(table.at(reduce_rational(base_b[i], mw_), n_work_));
    }

    unit_.resize(p - 1);
    pexp_.resize(p - 1);
    for (i64 j = 0; j < pm1; ++j) {
        u64 u = 1;
        int e = 0;
        for (unsigned i = 0; i < n; ++i) {
            u = mw_.mul(u, table.at(reduce_rational(arg_a[i][j], mw_), n_work_));
            u = mw_.mul(u, table.at(reduce_rational(arg_b[i][j], mw_), n_work_));
            u = mw_.mul(u, inv_base[2 * i]);
            u = mw_.mul(u, inv_base[2 * i + 1]);
            e -= floor_a[i][j] + floor_b[i][j];
        }
        // (-1)^{jn} and the sign of (-p)^e
        bool negate = ((static_cast<u64>(j) * n) & 1) ^ (e & 1 ? 1 : 0);
        unit_[j] = negate ? mw_.neg(u) : u;
        pexp_[j] = e;
    }
}

GValue GEvaluator::eval(u64 t) const {
    t %= p_;
    if (t == 0)
        return GValue{PadicNumber::zero(p_), delta_, p_, t};

    const u64 pm1 = p_ - 1;
    u64 wbar = mw_.inv(teichmuller(t, p_, n_work_));

    // sum the terms aligned at the minimal p-exponent
    int emin = *std::min_element(pexp_.begin(), pexp_.end());
    u64 acc = 0;
    u64 chi = 1; // omega-bar^j(t)
    for (u64 j = 0; j < pm1; ++j) {
        u64 term = mw_.mul(unit_[j], chi);
        for (int k = pexp_[j] - emin; k > 0; --k) term = mw_.mul(term, p_);
        acc = mw_.add(acc, term);
        chi = mw_.mul(chi, wbar);
    }

    PadicNumber sum = PadicNumber::from_residue(acc, p_, n_work_, emin);
    u64 scale = mw_.neg(mw_.inv(pm1 % mw_.pn));
    PadicNumber value = sum.scaled_by_unit(scale, n_work_);
    if (!value.is_zero() && value.valuation() < delta_)
        throw Error("g_eval: computed valuation fell below the parameter bound");
    return GValue{value, delta_, p_, t};
}

GValue g_eval(const GParams& params, u64 t, u64 p, unsigned n_target) {
    return GEvaluator(params, p, n_target).eval(t);
}

GParams trace_parameters() {
    return GParams({Rational(1, 4), Rational(3, 4)}, {Rational(1, 3), Rational(2, 3)});
}

GParams modular_g4_parameters() {
    return GParams({Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)},
                   {Rational(0), Rational(0), Rational(0), Rational(0)});
}

GParams char3_parameters() {
    return GParams({Rational(0), Rational(0)}, {Rational(0), Rational(1, 2)});
}

GValue g4_modular(u64 p, unsigned n_target) {
    if (p == 5) throw std::invalid_argument("g4_modular: p = 5 excluded");
    return g_eval(modular_g4_parameters(), 1, p, n_target);
}

} // namespace padicg
