#pragma once
/// Exact scalars: rational functions num/den of Laurent polynomials in
/// u = q^(1/2), kept in a canonical form so that equality is structural.
///
/// Canonical form: the denominator is an ordinary polynomial (lowest
/// exponent 0) with constant coefficient exactly 1, and shares no
/// polynomial factor with the numerator.  Monomial units u^k are pushed
/// into the numerator.  Zero is represented as 0/1.

#include <string>

#include "tetra/laurent.hpp"

namespace tetra {

class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(int n) : num_(n), den_(1) {}
    Scalar(const GaussianRational& c) : num_(c), den_(1) {}
    Scalar(const LaurentPoly& p) : num_(p), den_(1) {}
    Scalar(LaurentPoly num, LaurentPoly den);

    static Scalar i() { return Scalar(GaussianRational::i()); }
    /// u^exp as a scalar; u = q^(1/2).
    static Scalar u_pow(int exp) { return Scalar(LaurentPoly::monomial(exp)); }
    /// q^exp as a scalar.
    static Scalar q_pow(int exp) { return u_pow(2 * exp); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inv() const;
    Scalar pow(int e) const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    bool operator<(const Scalar& o) const {
        if (num_ < o.num_) return true;
        if (o.num_ < num_) return false;
        return den_ < o.den_;
    }

    /// Canonical string "(<num>)/(<den>)".
    std::string str() const;

private:
    void normalize();

    LaurentPoly num_, den_;
};

}  // namespace tetra
