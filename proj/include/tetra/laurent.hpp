#pragma once
/// Laurent polynomials in one variable u with Gaussian-rational
/// coefficients.  Throughout the code base u stands for q^(1/2), so every
/// power of q, q^(1/2), q^2, ... that appears in the algebra is an integer
/// power of u.

#include <map>
#include <string>
#include <vector>

#include "tetra/rational.hpp"

namespace tetra {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const GaussianRational& c) {
        if (!c.is_zero()) c_[0] = c;
    }
    LaurentPoly(int n) : LaurentPoly(GaussianRational(n)) {}

    /// c * u^exp
    static LaurentPoly monomial(int exp, GaussianRational c = GaussianRational(1)) {
        LaurentPoly p;
        if (!c.is_zero()) p.c_[exp] = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one(); }

    /// Number of nonzero terms.
    std::size_t term_count() const { return c_.size(); }

    int min_exp() const;  // throws on zero polynomial
    int max_exp() const;

    GaussianRational coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? GaussianRational() : it->second;
    }

    void add_term(int exp, const GaussianRational& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const GaussianRational& c) const;
    /// Multiply by u^k.
    LaurentPoly shifted(int k) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    bool operator<(const LaurentPoly& o) const { return c_ < o.c_; }

    const std::map<int, GaussianRational>& terms() const { return c_; }

    /// Monic gcd of two polynomials with min_exp >= 0 (Euclid over the
    /// Gaussian-rational field, normalized so the lowest-degree coefficient
    /// of the result is 1).
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    /// Exact quotient a / b; throws std::domain_error if the division
    /// leaves a remainder or b is zero.
    static LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

    /// Deterministic human-readable form, terms in ascending powers of u.
    std::string str() const;

private:
    // exponent -> coefficient; invariant: no zero coefficients stored.
    std::map<int, GaussianRational> c_;
};

}  // namespace tetra
