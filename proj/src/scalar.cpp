#include "tetra/scalar.hpp"

#include <stdexcept>

namespace tetra {

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Scalar::normalize() {
    if (den_.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Push the denominator's monomial unit into the numerator.
    int dshift = den_.min_exp();
    if (dshift != 0) {
        den_ = den_.shifted(-dshift);
        num_ = num_.shifted(-dshift);
    }
    if (!den_.is_one()) {
        int nshift = num_.min_exp();
        LaurentPoly n0 = num_.shifted(-nshift);
        LaurentPoly g = LaurentPoly::gcd(n0, den_);
        if (!g.is_one()) {
            n0 = LaurentPoly::div_exact(n0, g);
            den_ = LaurentPoly::div_exact(den_, g);
        }
        num_ = n0.shifted(nshift);
    }
    // Scale so the denominator's constant coefficient is exactly 1.
    GaussianRational c = den_.coeff(0);
    if (!c.is_one()) {
        GaussianRational inv = c.inv();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) den_ = LaurentPoly(1);
        // Common denominator is already canonical; numerator sum cannot
        // introduce a new monomial unit in the denominator, but it can
        // introduce a common factor.
        if (!den_.is_one() && !num_.is_zero()) normalize();
        return *this;
    }
    // Adding a polynomial cannot disturb a reduced fraction:
    // gcd(a + c b, b) = gcd(a, b) = 1.
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;
        if (num_.is_zero()) den_ = LaurentPoly(1);
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        if (num_.is_zero()) den_ = LaurentPoly(1);
        return *this;
    }
    // Combine over the lcm of the denominators rather than their product.
    const LaurentPoly g = LaurentPoly::gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        const LaurentPoly dr = LaurentPoly::div_exact(o.den_, g);
        num_ = num_ * dr + o.num_ * LaurentPoly::div_exact(den_, g);
        den_ = den_ * dr;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (num_.is_zero() || o.num_.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return *this;
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;  // polynomial fast path
        return *this;
    }
    // A single-term factor is a unit of the Laurent ring, so it cannot
    // create a common factor with the other side's denominator.
    if (o.den_.is_one() && o.num_.term_count() == 1) {
        num_ = num_ * o.num_;
        return *this;
    }
    if (den_.is_one() && num_.term_count() == 1) {
        num_ = num_ * o.num_;
        den_ = o.den_;
        return *this;
    }
    // Cross-reduce each numerator against the opposite denominator; with
    // both inputs already reduced, the product then needs no further gcd,
    // and the denominator keeps its unit constant term.
    LaurentPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    if (!d2.is_one()) {
        const int shift = n1.min_exp();
        LaurentPoly p = n1.shifted(-shift);
        LaurentPoly g = LaurentPoly::gcd(p, d2);
        if (!g.is_one()) {
            n1 = LaurentPoly::div_exact(p, g).shifted(shift);
            d2 = LaurentPoly::div_exact(d2, g);
        }
    }
    if (!d1.is_one()) {
        const int shift = n2.min_exp();
        LaurentPoly p = n2.shifted(-shift);
        LaurentPoly g = LaurentPoly::gcd(p, d1);
        if (!g.is_one()) {
            n2 = LaurentPoly::div_exact(p, g).shifted(shift);
            d1 = LaurentPoly::div_exact(d1, g);
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::inv() const {
    if (num_.is_zero()) throw std::domain_error("Scalar: division by zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
    if (e == 0) return Scalar(1);
    Scalar base = e < 0 ? inv() : *this;
    int n = e < 0 ? -e : e;
    Scalar r(1);
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

std::string Scalar::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

}  // namespace tetra
