#include "tetra/r3d.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/parallel.hpp"
#include "tetra/qseries.hpp"

namespace tetra {

namespace {

// R^{a,b,c}_{i,j,k} =
//   sum over mu + lambda = b of
//     (-1)^lambda q^(i(c-j) + (k+1)lambda + mu(mu-k))
//     * (q^2;q^2)_{c+mu} / (q^2;q^2)_c
//     * binom(i, mu)_{q^2} * binom(j, lambda)_{q^2}
// subject to the conservation deltas a+b = i+j, b+c = j+k.  The binomials
// clip mu to [max(0, b-j), min(b, i)], and the Pochhammer ratio is the
// polynomial prod_{r=c+1}^{c+mu} (1 - q^(2r)).
Scalar compute_r(int a, int b, int c, int i, int j, int k) {
    if (a + b != i + j || b + c != j + k) return Scalar();
    LaurentPoly sum;
    const int mu_lo = std::max(0, b - j);
    const int mu_hi = std::min(b, i);
    for (int mu = mu_lo; mu <= mu_hi; ++mu) {
        const int lam = b - mu;
        const long e = static_cast<long>(i) * (c - j) + static_cast<long>(k + 1) * lam +
                       static_cast<long>(mu) * (mu - k);
        LaurentPoly term =
            LaurentPoly::monomial(static_cast<int>(2 * e), GaussianRational(lam % 2 == 0 ? 1 : -1));
        for (int r = c + 1; r <= c + mu; ++r) {
            LaurentPoly factor(1);
            factor.add_term(4 * r, GaussianRational(-1));
            term = term * factor;
        }
        term = term * q_binomial(i, mu, 4);
        term = term * q_binomial(j, lam, 4);
        sum += term;
    }
    return Scalar(sum);
}

std::map<std::array<int, 6>, Scalar> r_memo;
std::shared_mutex r_memo_mutex;

}  // namespace

Scalar r_coefficient(int a, int b, int c, int i, int j, int k) {
    if (a < 0 || b < 0 || c < 0 || i < 0 || j < 0 || k < 0) return Scalar();
    const std::array<int, 6> key{a, b, c, i, j, k};
    {
        std::shared_lock lock(r_memo_mutex);
        auto it = r_memo.find(key);
        if (it != r_memo.end()) return it->second;
    }
    Scalar value = compute_r(a, b, c, i, j, k);
    std::unique_lock lock(r_memo_mutex);
    return r_memo.emplace(key, std::move(value)).first->second;
}

FockVector apply_r(int s1, int s2, int s3, const FockIndex& idx) {
    const int n = static_cast<int>(idx.size());
    if (s1 < 1 || s1 > n || s2 < 1 || s2 > n || s3 < 1 || s3 > n)
        throw std::out_of_range("apply_r: site index out of range");
    if (s1 == s2 || s1 == s3 || s2 == s3)
        throw std::invalid_argument("apply_r: sites must be distinct");
    const int i = idx[s1 - 1], j = idx[s2 - 1], k = idx[s3 - 1];
    FockVector out;
    const int b_max = std::min(i + j, j + k);
    for (int b = 0; b <= b_max; ++b) {
        const int a = i + j - b;
        const int c = j + k - b;
        Scalar r = r_coefficient(a, b, c, i, j, k);
        if (r.is_zero()) continue;
        FockIndex out_idx = idx;
        out_idx[s1 - 1] = a;
        out_idx[s2 - 1] = b;
        out_idx[s3 - 1] = c;
        out.add(out_idx, r);
    }
    return out;
}

FockVector apply_r(int s1, int s2, int s3, const FockVector& v) {
    FockVector out;
    for (const auto& [idx, coeff] : v.terms()) out += apply_r(s1, s2, s3, idx).scaled(coeff);
    return out;
}

CheckReport verify_involution(int cutoff, int threads) {
    CheckReport rep;
    rep.name = "r3d-involution";
    rep.params["cutoff"] = std::to_string(cutoff);

    const std::vector<FockIndex> states = states_up_to(3, cutoff);
    std::vector<CheckReport> slots(states.size());
    parallel_for(
        states.size(),
        [&](std::size_t s) {
            const FockIndex& idx = states[s];
            FockVector twice = apply_r(1, 2, 3, apply_r(1, 2, 3, idx));
            slots[s].count();
            if (twice != FockVector::basis(idx))
                slots[s].fail("R(R|s>) = |s>", index_str(idx), twice.str(),
                              FockVector::basis(idx).str());
        },
        threads);
    for (const auto& sub : slots) rep.absorb(sub);
    return rep;
}

namespace {

std::vector<OperatorRelation> intertwining_relations() {
    SparseOperator R =
        SparseOperator::from_rule([](const FockIndex& idx) { return apply_r(1, 2, 3, idx); });
    auto k = [](int s) { return SparseOperator::generator(Gen::K, s); };
    auto ap = [](int s) { return SparseOperator::generator(Gen::APlus, s); };
    auto am = [](int s) { return SparseOperator::generator(Gen::AMinus, s); };

    std::vector<OperatorRelation> rels;
    rels.push_back({"R k2 a1+ = (k3 a1+ + k1 a2+ a3-) R",  //
                    R * (k(2) * ap(1)), (k(3) * ap(1) + k(1) * ap(2) * am(3)) * R});
    rels.push_back({"R k2 a1- = (k3 a1- + k1 a2- a3+) R",  //
                    R * (k(2) * am(1)), (k(3) * am(1) + k(1) * am(2) * ap(3)) * R});
    rels.push_back({"R a2+ = (a1+ a3+ - k1 k3 a2+) R",  //
                    R * ap(2), (ap(1) * ap(3) - k(1) * k(3) * ap(2)) * R});
    rels.push_back({"R a2- = (a1- a3- - k1 k3 a2-) R",  //
                    R * am(2), (am(1) * am(3) - k(1) * k(3) * am(2)) * R});
    rels.push_back({"R k2 a3+ = (k1 a3+ + k3 a1- a2+) R",  //
                    R * (k(2) * ap(3)), (k(1) * ap(3) + k(3) * am(1) * ap(2)) * R});
    rels.push_back({"R k2 a3- = (k1 a3- + k3 a1+ a2-) R",  //
                    R * (k(2) * am(3)), (k(1) * am(3) + k(3) * ap(1) * am(2)) * R});
    rels.push_back({"R k1 k2 = k1 k2 R",  //
                    R * (k(1) * k(2)), (k(1) * k(2)) * R});
    rels.push_back({"R k2 k3 = k2 k3 R",  //
                    R * (k(2) * k(3)), (k(2) * k(3)) * R});
    return rels;
}

}  // namespace

CheckReport verify_intertwining(int cutoff, int threads) {
    return sweep_relations("r3d-intertwining", {{"cutoff", std::to_string(cutoff)}},
                           intertwining_relations(), states_up_to(3, cutoff), threads);
}

CheckReport verify_conservation(int cutoff, int threads) {
    SparseOperator R =
        SparseOperator::from_rule([](const FockIndex& idx) { return apply_r(1, 2, 3, idx); });
    auto h = [](int s) { return SparseOperator::generator(Gen::H, s); };
    std::vector<OperatorRelation> rels;
    rels.push_back({"R (h1 + h2) = (h1 + h2) R",  //
                    R * (h(1) + h(2)), (h(1) + h(2)) * R});
    rels.push_back({"R (h2 + h3) = (h2 + h3) R",  //
                    R * (h(2) + h(3)), (h(2) + h(3)) * R});
    return sweep_relations("r3d-conservation", {{"cutoff", std::to_string(cutoff)}}, rels,
                           states_up_to(3, cutoff), threads);
}

CheckReport verify_tetrahedron(int cutoff, int threads) {
    CheckReport rep;
    rep.name = "r3d-tetrahedron";
    rep.params["cutoff"] = std::to_string(cutoff);

    const std::vector<FockIndex> states = states_up_to(6, cutoff);
    std::vector<CheckReport> slots(states.size());
    parallel_for(
        states.size(),
        [&](std::size_t s) {
            const FockIndex& idx = states[s];
            // R124 R135 R236 R456, rightmost factor acting first.
            FockVector lhs = apply_r(4, 5, 6, idx);
            lhs = apply_r(2, 3, 6, lhs);
            lhs = apply_r(1, 3, 5, lhs);
            lhs = apply_r(1, 2, 4, lhs);
            FockVector rhs = apply_r(1, 2, 4, idx);
            rhs = apply_r(1, 3, 5, rhs);
            rhs = apply_r(2, 3, 6, rhs);
            rhs = apply_r(4, 5, 6, rhs);
            slots[s].count();
            if (lhs != rhs)
                slots[s].fail("R124 R135 R236 R456 = R456 R236 R135 R124", index_str(idx),
                              lhs.str(), rhs.str());
        },
        threads);
    for (const auto& sub : slots) rep.absorb(sub);
    return rep;
}

}  // namespace tetra
