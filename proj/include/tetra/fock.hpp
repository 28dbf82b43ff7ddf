#pragma once
/// The q-oscillator Fock space and sparse operators acting on finite
/// tensor products of it.  Basis states are occupation-number lists; all
/// coefficients are exact scalars.
///
/// Generator actions on a single site:
///   a+ |m> = |m+1>
///   a- |m> = (1 - q^(2m)) |m-1>,   a- |0> = 0
///   k**(+-1) |m> = q**(+-(m+1/2)) |m>
///   h |m> = m |m>
/// The dual (bra) module enters only through the bilinear pairing
/// <m|m'> = (q^2; q^2)_m delta_{m,m'}.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tetra/report.hpp"
#include "tetra/scalar.hpp"

namespace tetra {

using FockIndex = std::vector<int>;

std::string index_str(const FockIndex& idx);

class FockVector {
public:
    FockVector() = default;

    static FockVector basis(FockIndex idx) {
        FockVector v;
        v.t_.emplace(std::move(idx), Scalar(1));
        return v;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<FockIndex, Scalar>& terms() const { return t_; }

    void add(const FockIndex& idx, const Scalar& c);

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    FockVector scaled(const Scalar& c) const;

    Scalar coeff(const FockIndex& idx) const {
        auto it = t_.find(idx);
        return it == t_.end() ? Scalar() : it->second;
    }

    friend bool operator==(const FockVector& a, const FockVector& b) { return a.t_ == b.t_; }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<FockIndex, Scalar> t_;  // invariant: no zero coefficients
};

enum class Gen { APlus, AMinus, K, KInv, H };

/// Action of a single-site generator; site is 1-based.
FockVector apply_generator(Gen g, int site, const FockIndex& idx);
FockVector apply_generator(Gen g, int site, const FockVector& v);

/// prod_i (q^2; q^2)_{m_i}
Scalar pairing_weight(const FockIndex& m);

/// <bra | ket> with the non-orthonormal pairing above.
Scalar pairing(const FockIndex& bra, const FockVector& ket);

/// A linear operator given by its action on basis states, tagged with the
/// formal degree it carries in the spectral variable z.  Composition adds
/// z-degrees; sums require matching z-degrees (homogeneity guard).
class SparseOperator {
public:
    using Rule = std::function<FockVector(const FockIndex&)>;

    SparseOperator() : zero_(true), z_deg_(0) {}

    static SparseOperator zero() { return SparseOperator(); }
    static SparseOperator identity();
    static SparseOperator generator(Gen g, int site);
    /// Diagonal operator idx -> f(idx) * |idx>.
    static SparseOperator diagonal(std::function<Scalar(const FockIndex&)> f);
    static SparseOperator from_rule(Rule r, int z_degree = 0);

    bool is_zero_op() const { return zero_; }
    int z_degree() const { return z_deg_; }
    SparseOperator with_z_degree(int d) const;

    FockVector apply(const FockIndex& idx) const;
    FockVector apply(const FockVector& v) const;

    SparseOperator operator*(const SparseOperator& o) const;  // this after o
    SparseOperator operator+(const SparseOperator& o) const;
    SparseOperator operator-(const SparseOperator& o) const;
    SparseOperator scaled(const Scalar& c) const;
    SparseOperator pow(int k) const;  // k >= 0

private:
    Rule rule_;
    bool zero_;
    int z_deg_;
};

/// Sweep helpers: all occupation lists of the given arity with every
/// component <= cutoff, or with total degree <= bound.
std::vector<FockIndex> states_up_to(int arity, int cutoff);
std::vector<FockIndex> states_total_degree(int arity, int bound);

/// A named pair of operators expected to agree on every swept state.
struct OperatorRelation {
    std::string name;
    SparseOperator lhs;
    SparseOperator rhs;
};

/// Checks lhs == rhs on each state, parallel over (relation, state) with
/// deterministic aggregation; `params` is echoed into the report.
CheckReport sweep_relations(const std::string& report_name,
                            const std::map<std::string, std::string>& params,
                            const std::vector<OperatorRelation>& rels,
                            const std::vector<FockIndex>& states, int threads = 0);

/// Checks the q-oscillator algebra relations
///   k k^-1 = 1,  k a^± = q^(+-1) a^± k,  a^± a^∓ = 1 - q^(∓1) k^2
/// exactly on all |m> with m <= cutoff.
CheckReport verify_qosc_relations(int cutoff);

}  // namespace tetra
