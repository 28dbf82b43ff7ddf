#include "tetra/qseries.hpp"

#include <stdexcept>

namespace tetra {

LaurentPoly q_pochhammer(int base_exp, int m) {
    if (base_exp < 1) throw std::domain_error("q_pochhammer: base_exp must be >= 1");
    if (m < 0) throw std::domain_error("q_pochhammer: negative length");
    LaurentPoly r(1);
    for (int k = 1; k <= m; ++k) {
        LaurentPoly f(1);
        f.add_term(base_exp * k, GaussianRational(-1));
        r = r * f;
    }
    return r;
}

LaurentPoly q_binomial(int m, int k, int base_exp) {
    if (k < 0 || k > m) return LaurentPoly();
    LaurentPoly num = q_pochhammer(base_exp, m);
    LaurentPoly den = q_pochhammer(base_exp, k) * q_pochhammer(base_exp, m - k);
    return LaurentPoly::div_exact(num, den);
}

LaurentPoly q_integer(int m, int base_exp) {
    LaurentPoly r;
    for (int j = 0; j < m; ++j) r.add_term(base_exp * (m - 1 - 2 * j), GaussianRational(1));
    return r;
}

Scalar q_integer_factorial(int m, int base_exp) {
    if (m < 0) throw std::domain_error("q_integer_factorial: negative argument");
    Scalar r(1);
    for (int k = 2; k <= m; ++k) r *= Scalar(q_integer(k, base_exp));
    return r;
}

}  // namespace tetra
