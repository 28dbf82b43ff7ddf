#include "tetra/mpo.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "tetra/parallel.hpp"
#include "tetra/qseries.hpp"
#include "tetra/r3d.hpp"

namespace tetra {

namespace {

GaussianRational i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

/// (i q^(1/2))^k
Scalar zz_scale(int k) { return Scalar(LaurentPoly::monomial(k, i_pow(k))); }

void require_st(int s, const char* what) {
    if (s != 1 && s != 2) throw std::invalid_argument(std::string(what) + " must be 1 or 2");
}

/// 1/(p; p)_m with p = q^(s^2), memoized; references stay valid under
/// concurrent inserts.
const Scalar& chi_inv(int s, int m) {
    static std::map<std::pair<int, int>, Scalar> memo;
    static std::shared_mutex mtx;
    const std::pair<int, int> key{s, m};
    {
        std::shared_lock lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Scalar v = Scalar(q_pochhammer(2 * s * s, m)).inv();
    std::unique_lock lock(mtx);
    return memo.emplace(key, std::move(v)).first->second;
}

Scalar w_pair(int m) { return Scalar(q_pochhammer(4, m)); }  // (q^2; q^2)_m

/// Image of |alpha, beta> under the order-j coefficient of S.  The bra
/// boundary index is j (so j = s m), the ket index t m' is fixed by
/// conservation, and the space-3 line through the R-chain telescopes from
/// t m' (site n acts first) down to j.
FockVector s_order_image(int t, int n, int j, const Scalar& prefactor, const FockIndex& idx) {
    if (static_cast<int>(idx.size()) != 2 * n)
        throw std::invalid_argument("S order applied to state of wrong arity");
    FockVector out;
    std::vector<int> sums(n);
    for (int i = 0; i < n; ++i) sums[i] = idx[i] + idx[n + i];
    std::vector<int> bp(n, 0);  // out-state beta digits, odometer over 0..sums[i]
    for (;;) {
        int tmp = j;  // t * m' by conservation through the chain
        for (int i = 0; i < n; ++i) tmp += bp[i] - idx[n + i];
        if (tmp >= 0 && tmp % t == 0) {
            // The R coefficients are Laurent polynomials, so the chain is
            // accumulated raw and normalized against the boundary
            // denominators once per element.
            LaurentPoly chain(1);
            int c = tmp;
            for (int i = n - 1; i >= 0 && !chain.is_zero(); --i) {
                const int cout = idx[n + i] + c - bp[i];
                if (cout < 0) {
                    chain = LaurentPoly();
                    break;
                }
                const Scalar step =
                    r_coefficient(sums[i] - bp[i], bp[i], cout, idx[i], idx[n + i], c);
                if (!step.is_polynomial()) throw std::logic_error("non-polynomial R coefficient");
                chain = chain * step.num();
                c = cout;
            }
            if (!chain.is_zero()) {
                if (c != j) throw std::logic_error("S chain conservation mismatch");
                FockIndex oidx(2 * n);
                for (int i = 0; i < n; ++i) {
                    oidx[i] = sums[i] - bp[i];
                    oidx[n + i] = bp[i];
                }
                out.add(oidx, prefactor * chi_inv(t, tmp / t) * Scalar(chain));
            }
        }
        int d = 0;
        while (d < n && bp[d] == sums[d]) bp[d++] = 0;
        if (d == n) break;
        ++bp[d];
    }
    return out;
}

/// Wrap an operator with a thread-safe image cache; the verifier sweeps
/// revisit the same basis states across many relations.
SparseOperator memoized(const SparseOperator& op) {
    if (op.is_zero_op()) return op;
    struct Cache {
        std::map<FockIndex, FockVector> images;
        std::shared_mutex mtx;
    };
    auto cache = std::make_shared<Cache>();
    return SparseOperator::from_rule(
        [op, cache](const FockIndex& idx) {
            {
                std::shared_lock lock(cache->mtx);
                auto it = cache->images.find(idx);
                if (it != cache->images.end()) return it->second;
            }
            FockVector img = op.apply(idx);
            std::unique_lock lock(cache->mtx);
            return cache->images.emplace(idx, std::move(img)).first->second;
        },
        op.z_degree());
}

SparseOperator make_s_order(int s, int t, int n, int j) {
    if (j % s != 0) return SparseOperator::zero().with_z_degree(j);
    // <sm| weight over both boundary normalizations
    const Scalar prefactor = w_pair(j) * chi_inv(s, j / s);
    return memoized(SparseOperator::from_rule(
        [t, n, j, prefactor](const FockIndex& idx) {
            return s_order_image(t, n, j, prefactor, idx);
        },
        j));
}

/// Lift a 2n-site operator onto legs (leg_a, leg_b) of a 3n-site state.
SparseOperator embed_pair(const SparseOperator& op, int n, int leg_a, int leg_b) {
    if (op.is_zero_op()) return op;
    return SparseOperator::from_rule(
        [op, n, leg_a, leg_b](const FockIndex& idx) {
            FockIndex sub(2 * n);
            for (int i = 0; i < n; ++i) {
                sub[i] = idx[leg_a * n + i];
                sub[n + i] = idx[leg_b * n + i];
            }
            FockVector res;
            const FockVector img = op.apply(sub);
            for (const auto& [sidx, c] : img.terms()) {
                FockIndex oidx = idx;
                for (int i = 0; i < n; ++i) {
                    oidx[leg_a * n + i] = sidx[i];
                    oidx[leg_b * n + i] = sidx[n + i];
                }
                res.add(oidx, c);
            }
            return res;
        },
        op.z_degree());
}

std::string orders_str(const std::vector<int>& z_orders) {
    std::string s;
    for (int j : z_orders) {
        if (!s.empty()) s += ",";
        s += std::to_string(j);
    }
    return s;
}

}  // namespace

Scalar BoundaryVector::coeff(int index) const {
    if (index < 0 || index % s != 0) return Scalar();
    return chi_inv(s, index / s);
}

BoundaryVector boundary_vector(int s) {
    require_st(s, "boundary_vector: s");
    return BoundaryVector{s};
}

CheckReport verify_chi_conditions(int s, int cutoff) {
    require_st(s, "verify_chi_conditions: s");
    BoundaryVector chi = boundary_vector(s);
    CheckReport rep;
    rep.name = "chi-conditions";
    rep.params = {{"s", std::to_string(s)}, {"cutoff", std::to_string(cutoff)}};
    const Scalar one(1);
    auto check = [&](const char* relation, int m, const Scalar& lhs, const Scalar& rhs) {
        rep.count();
        if (lhs != rhs) rep.fail(relation, index_str({m}), lhs.str(), rhs.str());
    };
    for (int m = 0; m <= cutoff; ++m) {
        // Coefficient of |m> on each side; chi.coeff() vanishes off support.
        const Scalar lower = chi.coeff(m - 1);             // from a+
        const Scalar raise = chi.coeff(m + 1) * (one - Scalar::q_pow(2 * (m + 1)));  // from a-
        const Scalar lower_bra = chi.coeff(m + 1) * w_pair(m + 1);  // <chi| a+ against |m>
        const Scalar raise_bra = chi.coeff(m - 1) * w_pair(std::max(m - 1, 0)) *
                                 (one - Scalar::q_pow(2 * m));      // <chi| a- against |m>
        const Scalar wm = w_pair(m);
        if (s == 1) {
            check("a+ chi1 = (1 - q^(-1/2) k) chi1", m, lower,
                  chi.coeff(m) * (one - Scalar::q_pow(m)));
            check("a- chi1 = (1 + q^(1/2) k) chi1", m, raise,
                  chi.coeff(m) * (one + Scalar::q_pow(m + 1)));
            check("chi1 a+ = chi1 (1 + q^(1/2) k)", m, lower_bra,
                  chi.coeff(m) * wm * (one + Scalar::q_pow(m + 1)));
            check("chi1 a- = chi1 (1 - q^(-1/2) k)", m, raise_bra,
                  chi.coeff(m) * wm * (one - Scalar::q_pow(m)));
        } else {
            check("a+ chi2 = a- chi2", m, lower, raise);
            check("chi2 a+ = chi2 a-", m, lower_bra, raise_bra);
        }
    }
    return rep;
}

CheckReport verify_boundary_fixed(int s, int out_cutoff, int threads) {
    require_st(s, "verify_boundary_fixed: s");
    BoundaryVector chi = boundary_vector(s);
    const std::vector<FockIndex> triples = states_up_to(3, out_cutoff);
    std::vector<CheckReport> slots(triples.size());
    parallel_for(
        triples.size(),
        [&](std::size_t ti) {
            const FockIndex& o = triples[ti];
            CheckReport& rep = slots[ti];
            const int a = o[0], b = o[1], c = o[2];
            const Scalar chi_o = chi.coeff(a) * chi.coeff(b) * chi.coeff(c);
            // Ket side: component <a,b,c| of R applied to chi x chi x chi.
            Scalar ket;
            for (int jj = 0; jj <= std::min(a + b, b + c); ++jj)
                ket += r_coefficient(a, b, c, a + b - jj, jj, b + c - jj) *
                       chi.coeff(a + b - jj) * chi.coeff(jj) * chi.coeff(b + c - jj);
            rep.count();
            if (ket != chi_o)
                rep.fail("R (chi x chi x chi) = chi x chi x chi", index_str(o), ket.str(),
                         chi_o.str());
            // Bra side, through the pairing: the functional (chi x chi x chi) R
            // evaluated against |a,b,c>.
            Scalar bra;
            for (int bb = 0; bb <= std::min(a + b, b + c); ++bb) {
                const int aa = a + b - bb, cc = b + c - bb;
                bra += chi.coeff(aa) * chi.coeff(bb) * chi.coeff(cc) *
                       pairing_weight({aa, bb, cc}) * r_coefficient(aa, bb, cc, a, b, c);
            }
            const Scalar bra_rhs = chi_o * pairing_weight(o);
            rep.count();
            if (bra != bra_rhs)
                rep.fail("(chi x chi x chi) R = chi x chi x chi", index_str(o), bra.str(),
                         bra_rhs.str());
        },
        threads);
    CheckReport rep;
    rep.name = "boundary-fixed";
    rep.params = {{"s", std::to_string(s)}, {"out_cutoff", std::to_string(out_cutoff)}};
    for (const auto& sl : slots) rep.absorb(sl);
    return rep;
}

const SparseOperator& ZSeries::op(int j) const {
    auto it = orders.find(j);
    if (it == orders.end())
        throw std::out_of_range("ZSeries: z-order " + std::to_string(j) + " not retained");
    return it->second;
}

ZSeries build_S(int s, int t, int n, const std::vector<int>& z_orders, int fock_cutoff) {
    require_st(s, "build_S: s");
    require_st(t, "build_S: t");
    if (n < 1) throw std::invalid_argument("build_S: n must be >= 1");
    if (fock_cutoff < 0) throw std::invalid_argument("build_S: fock_cutoff must be >= 0");
    ZSeries z;
    z.s = s;
    z.t = t;
    z.n = n;
    z.fock_cutoff = fock_cutoff;
    for (int j : z_orders) {
        if (j < 0) throw std::invalid_argument("build_S: z-orders are non-negative");
        if (!z.orders.count(j)) z.orders.emplace(j, make_s_order(s, t, n, j));
    }
    return z;
}

SparseOperator zigzag_K(int sites) {
    return SparseOperator::diagonal([sites](const FockIndex& idx) {
        if (static_cast<int>(idx.size()) != sites)
            throw std::invalid_argument("zigzag_K: arity mismatch");
        return zz_scale(std::accumulate(idx.begin(), idx.end(), 0));
    });
}

SparseOperator zigzag_K_inv(int sites) {
    return SparseOperator::diagonal([sites](const FockIndex& idx) {
        if (static_cast<int>(idx.size()) != sites)
            throw std::invalid_argument("zigzag_K_inv: arity mismatch");
        return zz_scale(-std::accumulate(idx.begin(), idx.end(), 0));
    });
}

ZSeries zigzag_transform(const ZSeries& S) {
    ZSeries out = S;
    out.orders.clear();
    const int n = S.n;
    for (const auto& [j, op] : S.orders) {
        if (op.is_zero_op()) {
            out.orders.emplace(j, op);
            continue;
        }
        // (K x 1) S (1 x K^-1): each matrix element picks up
        // (i q^(1/2))^(out alpha total - in beta total).
        out.orders.emplace(
            j, memoized(SparseOperator::from_rule(
                   [op, n](const FockIndex& idx) {
                       const int beta = std::accumulate(idx.begin() + n, idx.end(), 0);
                       FockVector res;
                       const FockVector img = op.apply(idx);
                       for (const auto& [oidx, c] : img.terms()) {
                           const int alpha = std::accumulate(oidx.begin(), oidx.begin() + n, 0);
                           res.add(oidx, c * zz_scale(alpha - beta));
                       }
                       return res;
                   },
                   j)));
    }
    return out;
}

CheckReport verify_zigzag_commute(const ZSeries& S, int threads) {
    const SparseOperator KK = zigzag_K(2 * S.n);
    std::vector<OperatorRelation> rels;
    for (const auto& [j, op] : S.orders)
        rels.push_back({"[S_" + std::to_string(j) + ", K x K] = 0", op * KK, KK * op});
    return sweep_relations("zigzag-commute",
                           {{"s", std::to_string(S.s)},
                            {"t", std::to_string(S.t)},
                            {"n", std::to_string(S.n)},
                            {"fock_cutoff", std::to_string(S.fock_cutoff)}},
                           rels, states_up_to(2 * S.n, S.fock_cutoff), threads);
}

CheckReport verify_ybe(int s, int t, int n, int total_order, int fock_cutoff, int threads) {
    ZSeries S = build_S(s, t, n, z_orders_up_to(total_order), fock_cutoff);
    auto emb = [&](int leg_a, int leg_b, int j) { return embed_pair(S.op(j), n, leg_a, leg_b); };
    std::vector<OperatorRelation> rels;
    for (int p = 0; p <= total_order; ++p) {
        for (int r = 0; p + r <= total_order; ++r) {
            // Coefficient of x^p y^r: S_ab carries x, S_ac carries xy, S_bc
            // carries y; the rightmost factor acts first.
            SparseOperator lhs = SparseOperator::zero();
            SparseOperator rhs = SparseOperator::zero();
            for (int j = 0; j <= std::min(p, r); ++j) {
                lhs = lhs + (emb(0, 1, p - j) * emb(0, 2, j) * emb(1, 2, r - j)).with_z_degree(0);
                rhs = rhs + (emb(1, 2, r - j) * emb(0, 2, j) * emb(0, 1, p - j)).with_z_degree(0);
            }
            rels.push_back(
                {"YBE @ x^" + std::to_string(p) + " y^" + std::to_string(r), lhs, rhs});
        }
    }
    return sweep_relations("mpo-ybe",
                           {{"s", std::to_string(s)},
                            {"t", std::to_string(t)},
                            {"n", std::to_string(n)},
                            {"total_order", std::to_string(total_order)},
                            {"fock_cutoff", std::to_string(fock_cutoff)}},
                           rels, states_up_to(3 * n, fock_cutoff), threads);
}

CheckReport verify_symmetry(int s, int t, int n, const std::vector<int>& z_orders,
                            int fock_cutoff, int threads) {
    const AlgebraSpec spec = build_algebra(s, t, n);
    struct GenCheck {
        std::string name;
        CoproductOperator dp, d;
    };
    std::vector<GenCheck> gens;
    const char* tag[] = {"e", "f", "k", "k^-1"};
    for (int node = 0; node <= n; ++node) {
        for (UqGen kind : {UqGen::E, UqGen::F, UqGen::K, UqGen::KInv}) {
            gens.push_back({std::string(tag[static_cast<int>(kind)]) + "_" + std::to_string(node),
                            coproduct(spec, kind, node, CoproductVariant::DeltaPrime, 1, 0),
                            coproduct(spec, kind, node, CoproductVariant::Delta, 1, 0)});
        }
    }
    // Shat orders each retained order couples to through the term degrees.
    std::set<int> need;
    for (const auto& g : gens) {
        for (const auto* co : {&g.dp, &g.d})
            for (const auto& T : co->terms)
                for (int w : z_orders)
                    if (w - T.degree >= 0) need.insert(w - T.degree);
    }
    const ZSeries Shat =
        zigzag_transform(build_S(s, t, n, std::vector<int>(need.begin(), need.end()), fock_cutoff));
    std::vector<OperatorRelation> rels;
    for (const auto& g : gens) {
        for (int w : z_orders) {
            SparseOperator lhs = SparseOperator::zero();
            SparseOperator rhs = SparseOperator::zero();
            for (const auto& T : g.dp.terms) {
                const int j = w - T.degree;
                if (j >= 0 && Shat.has_order(j)) lhs = lhs + T.op() * Shat.op(j);
            }
            for (const auto& T : g.d.terms) {
                const int j = w - T.degree;
                if (j >= 0 && Shat.has_order(j)) rhs = rhs + Shat.op(j) * T.op();
            }
            rels.push_back({"Delta'(" + g.name + ") Shat = Shat Delta(" + g.name + ") @ z^" +
                                std::to_string(w),
                            lhs, rhs});
        }
    }
    return sweep_relations("mpo-symmetry",
                           {{"s", std::to_string(s)},
                            {"t", std::to_string(t)},
                            {"n", std::to_string(n)},
                            {"z_orders", orders_str(z_orders)},
                            {"fock_cutoff", std::to_string(fock_cutoff)}},
                           rels, states_up_to(2 * n, fock_cutoff), threads);
}

std::vector<int> z_orders_up_to(int max_order) {
    std::vector<int> out;
    for (int j = 0; j <= max_order; ++j) out.push_back(j);
    return out;
}

}  // namespace tetra
