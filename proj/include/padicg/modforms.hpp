#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "padicg/residue.hpp"

namespace padicg {

using BigInt = boost::multiprecision::cpp_int;

// Truncated integer power series sum c(k) q^k, 0 <= k <= M.  Coefficients are
// exact integers; products never read beyond the truncation order.
class QSeries {
public:
    explicit QSeries(unsigned truncation);
    static QSeries one(unsigned truncation);

    unsigned truncation() const { return static_cast<unsigned>(c_.size() - 1); }

    const BigInt& coefficient(unsigned k) const;  // IndexBeyondTruncation past M
    BigInt& at(unsigned k);

    QSeries operator+(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries scaled(const BigInt& s) const;
    QSeries shifted(unsigned k) const;  // multiply by q^k, dropping the tail

    bool operator==(const QSeries& o) const { return c_ == o.c_; }

private:
    std::vector<BigInt> c_;
};

// prod_{m >= 1} (1 - q^{scale*m})^{exponent} to order M.
QSeries euler_product(unsigned exponent, unsigned scale, unsigned truncation);

// The weight-4 cusp form assembled from the five eta quotients
//   f_i = eta^{5-i}(z) eta^4(5z) eta^{i-1}(25z),   f = f1 + 5f2 + 20f3 + 25f4 + 25f5.
// Each eta factor carries a q^{1/24} prefactor; the offsets are tracked as
// exact rationals and must sum to the integer i for each piece.
QSeries build_f(unsigned truncation);

inline constexpr unsigned kDefaultTruncation = 60;

// c(n) of the cusp form, built at the given truncation.
BigInt cusp_form_coefficient(unsigned n, unsigned truncation = kDefaultTruncation);

} // namespace padicg
