#include "tetra/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace tetra {

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::domain_error("LaurentPoly: min_exp of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::domain_error("LaurentPoly: max_exp of zero polynomial");
    return c_.rbegin()->first;
}

void LaurentPoly::add_term(int exp, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : c_) r.c_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
    return r;
}

namespace {

// Dense coefficient vector for ordinary polynomials (min_exp >= 0).
std::vector<GaussianRational> to_dense(const LaurentPoly& p) {
    std::vector<GaussianRational> v;
    if (p.is_zero()) return v;
    if (p.min_exp() < 0) throw std::domain_error("LaurentPoly: negative exponent where polynomial expected");
    v.resize(static_cast<std::size_t>(p.max_exp()) + 1);
    for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e)] = c;
    return v;
}

LaurentPoly from_dense(const std::vector<GaussianRational>& v) {
    LaurentPoly p;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) p.add_term(static_cast<int>(k), v[k]);
    return p;
}

void trim(std::vector<GaussianRational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// In-place remainder of a by b (b nonzero, trimmed).
void rem_inplace(std::vector<GaussianRational>& a, const std::vector<GaussianRational>& b) {
    GaussianRational lead_inv = b.back().inv();
    while (a.size() >= b.size()) {
        GaussianRational f = a.back() * lead_inv;
        std::size_t off = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) {
            a[off + k] -= f * b[k];
        }
        a.pop_back();
        trim(a);
        if (a.empty()) return;
    }
}

void make_monic(std::vector<GaussianRational>& v) {
    if (v.empty()) return;
    GaussianRational inv = v.back().inv();
    for (auto& c : v) c *= inv;
}

}  // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("LaurentPoly: gcd(0, 0)");
    std::vector<GaussianRational> x = to_dense(a), y = to_dense(b);
    while (!y.empty()) {
        make_monic(y);
        rem_inplace(x, y);
        std::swap(x, y);
    }
    // Normalize so the lowest-degree coefficient is 1.
    std::size_t low = 0;
    while (x[low].is_zero()) ++low;
    GaussianRational inv = x[low].inv();
    for (auto& c : x) c *= inv;
    return from_dense(x);
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    // Reduce to ordinary polynomial division via unit shifts.
    int ashift = a.min_exp(), bshift = b.min_exp();
    std::vector<GaussianRational> x = to_dense(a.shifted(-ashift));
    std::vector<GaussianRational> y = to_dense(b.shifted(-bshift));
    std::vector<GaussianRational> quot(x.size() >= y.size() ? x.size() - y.size() + 1 : 0);
    GaussianRational lead_inv = y.back().inv();
    while (x.size() >= y.size()) {
        GaussianRational f = x.back() * lead_inv;
        std::size_t off = x.size() - y.size();
        quot[off] = f;
        for (std::size_t k = 0; k < y.size(); ++k) x[off + k] -= f * y[k];
        x.pop_back();
        trim(x);
        if (x.empty()) break;
    }
    if (!x.empty()) throw std::domain_error("LaurentPoly: inexact polynomial division");
    return from_dense(quot).shifted(ashift - bshift);
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        std::string cs = c.str();
        bool composite = cs.find_first_of("+-i/") != std::string::npos && cs != "-i";
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (c.is_one())
            ;  // bare u^e
        else if (c == GaussianRational(-1))
            os << "-";
        else
            os << (composite ? "(" + cs + ")" : cs) << "*";
        os << "u^" << e;
    }
    return os.str();
}

}  // namespace tetra
