#include "padicg/modforms.hpp"

#include <stdexcept>

#include "padicg/rational.hpp"

namespace padicg {

QSeries::QSeries(unsigned truncation) : c_(truncation + 1) {}

QSeries QSeries::one(unsigned truncation) {
    QSeries s(truncation);
    s.c_[0] = 1;
    return s;
}

const BigInt& QSeries::coefficient(unsigned k) const {
    if (k >= c_.size())
        throw IndexBeyondTruncation("QSeries: coefficient beyond truncation order");
    return c_[k];
}

BigInt& QSeries::at(unsigned k) {
    if (k >= c_.size())
        throw IndexBeyondTruncation("QSeries: coefficient beyond truncation order");
    return c_[k];
}

QSeries QSeries::operator+(const QSeries& o) const {
    unsigned m = std::min(truncation(), o.truncation());
    QSeries r(m);
    for (unsigned k = 0; k <= m; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    unsigned m = std::min(truncation(), o.truncation());
    QSeries r(m);
    for (unsigned i = 0; i <= m; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; i + j <= m; ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

QSeries QSeries::scaled(const BigInt& s) const {
    QSeries r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

QSeries QSeries::shifted(unsigned k) const {
    QSeries r(truncation());
    for (unsigned i = 0; i + k <= truncation(); ++i) r.c_[i + k] = c_[i];
    return r;
}

QSeries euler_product(unsigned exponent, unsigned scale, unsigned truncation) {
    if (scale == 0) throw std::invalid_argument("euler_product: scale must be positive");
    QSeries r = QSeries::one(truncation);
    for (unsigned m = 1; scale * m <= truncation; ++m) {
        // multiply by (1 - q^{scale*m})^exponent, factor by factor
        for (unsigned e = 0; e < exponent; ++e) {
            QSeries next(truncation);
            for (unsigned k = 0; k <= truncation; ++k) {
                next.at(k) = r.coefficient(k);
                if (k >= scale * m) next.at(k) -= r.coefficient(k - scale * m);
            }
            r = next;
        }
    }
    return r;
}

QSeries build_f(unsigned truncation) {
    static constexpr int kWeights[5] = {1, 5, 20, 25, 25};
    QSeries f(truncation);
    for (unsigned i = 1; i <= 5; ++i) {
        // eta prefactor exponents: (5-i)/24 + 4*5/24 + 25(i-1)/24 must be the integer i
        Rational offset = Rational(5 - i, 24) + Rational(20, 24) + Rational(25 * (i - 1), 24);
        if (!offset.is_integer() || offset.num != static_cast<i64>(i))
            throw Error("build_f: eta prefactors do not align to q^i");
        QSeries piece = euler_product(5 - i, 1, truncation) *
                        euler_product(4, 5, truncation) *
                        euler_product(i - 1, 25, truncation);
        f = f + piece.shifted(i).scaled(kWeights[i - 1]);
    }
    return f;
}

BigInt cusp_form_coefficient(unsigned n, unsigned truncation) {
    return build_f(truncation).coefficient(n);
}

} // namespace padicg
