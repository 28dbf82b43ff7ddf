#pragma once
/// q-Pochhammer symbols, Gaussian binomials and q-integer factorials.
/// Bases are passed as powers of u = q^(1/2): base_exp = 2 means base q,
/// base_exp = 4 means base q^2, base_exp = 1 means base q^(1/2).

#include "tetra/laurent.hpp"
#include "tetra/scalar.hpp"

namespace tetra {

/// (p; p)_m = prod_{k=1..m} (1 - p^k) with p = u^base_exp.  m >= 0.
LaurentPoly q_pochhammer(int base_exp, int m);

/// Gaussian binomial binom(m, k)_p with p = u^base_exp; zero when k is
/// outside [0, m].  Always a genuine polynomial in p.
LaurentPoly q_binomial(int m, int k, int base_exp);

/// Symmetric q-integer [m]_p = (p^m - p^-m)/(p - p^-1) as a Laurent
/// polynomial, p = u^base_exp.
LaurentPoly q_integer(int m, int base_exp);

/// [m]_p! as a Scalar.
Scalar q_integer_factorial(int m, int base_exp);

}  // namespace tetra
