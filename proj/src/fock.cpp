#include "tetra/fock.hpp"

#include <sstream>
#include <stdexcept>

#include "tetra/parallel.hpp"
#include "tetra/qseries.hpp"

namespace tetra {

std::string index_str(const FockIndex& idx) {
    std::ostringstream os;
    os << "|";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) os << ",";
        os << idx[k];
    }
    os << ">";
    return os.str();
}

void FockVector::add(const FockIndex& idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [idx, c] : o.t_) add(idx, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [idx, c] : o.t_) add(idx, -c);
    return *this;
}

FockVector FockVector::scaled(const Scalar& c) const {
    FockVector r;
    if (c.is_zero()) return r;
    for (const auto& [idx, v] : t_) r.t_.emplace(idx, v * c);
    return r;
}

std::string FockVector::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << index_str(idx);
    }
    return os.str();
}

FockVector apply_generator(Gen g, int site, const FockIndex& idx) {
    if (site < 1 || static_cast<std::size_t>(site) > idx.size())
        throw std::out_of_range("apply_generator: site out of range");
    int m = idx[static_cast<std::size_t>(site - 1)];
    FockVector out;
    FockIndex next = idx;
    switch (g) {
        case Gen::APlus:
            next[static_cast<std::size_t>(site - 1)] = m + 1;
            out.add(next, Scalar(1));
            break;
        case Gen::AMinus: {
            if (m == 0) break;
            next[static_cast<std::size_t>(site - 1)] = m - 1;
            LaurentPoly c(1);
            c.add_term(4 * m, GaussianRational(-1));  // 1 - q^(2m)
            out.add(next, Scalar(c));
            break;
        }
        case Gen::K:
            out.add(next, Scalar::u_pow(2 * m + 1));
            break;
        case Gen::KInv:
            out.add(next, Scalar::u_pow(-2 * m - 1));
            break;
        case Gen::H:
            out.add(next, Scalar(m));
            break;
    }
    return out;
}

FockVector apply_generator(Gen g, int site, const FockVector& v) {
    FockVector out;
    for (const auto& [idx, c] : v.terms()) out += apply_generator(g, site, idx).scaled(c);
    return out;
}

Scalar pairing_weight(const FockIndex& m) {
    Scalar w(1);
    for (int mi : m) w *= Scalar(q_pochhammer(4, mi));
    return w;
}

Scalar pairing(const FockIndex& bra, const FockVector& ket) {
    return pairing_weight(bra) * ket.coeff(bra);
}

SparseOperator SparseOperator::identity() {
    return from_rule([](const FockIndex& idx) { return FockVector::basis(idx); }, 0);
}

SparseOperator SparseOperator::generator(Gen g, int site) {
    return from_rule([g, site](const FockIndex& idx) { return apply_generator(g, site, idx); }, 0);
}

SparseOperator SparseOperator::diagonal(std::function<Scalar(const FockIndex&)> f) {
    return from_rule([f = std::move(f)](const FockIndex& idx) {
        FockVector v;
        v.add(idx, f(idx));
        return v;
    });
}

SparseOperator SparseOperator::from_rule(Rule r, int z_degree) {
    SparseOperator op;
    op.rule_ = std::move(r);
    op.zero_ = false;
    op.z_deg_ = z_degree;
    return op;
}

SparseOperator SparseOperator::with_z_degree(int d) const {
    SparseOperator op = *this;
    op.z_deg_ = d;
    return op;
}

FockVector SparseOperator::apply(const FockIndex& idx) const {
    if (zero_) return FockVector();
    return rule_(idx);
}

FockVector SparseOperator::apply(const FockVector& v) const {
    FockVector out;
    if (zero_) return out;
    for (const auto& [idx, c] : v.terms()) out += rule_(idx).scaled(c);
    return out;
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
    if (zero_ || o.zero_) return zero();
    SparseOperator a = *this, b = o;
    return from_rule([a, b](const FockIndex& idx) { return a.apply(b.apply(idx)); },
                     z_deg_ + o.z_deg_);
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
    if (zero_) return o;
    if (o.zero_) return *this;
    if (z_deg_ != o.z_deg_)
        throw std::logic_error("SparseOperator: sum of operators with different z-degrees");
    SparseOperator a = *this, b = o;
    return from_rule([a, b](const FockIndex& idx) { return a.apply(idx) + b.apply(idx); }, z_deg_);
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
    return *this + o.scaled(Scalar(-1));
}

SparseOperator SparseOperator::scaled(const Scalar& c) const {
    if (zero_ || c.is_zero()) return zero();
    SparseOperator a = *this;
    return from_rule([a, c](const FockIndex& idx) { return a.apply(idx).scaled(c); }, z_deg_);
}

SparseOperator SparseOperator::pow(int k) const {
    if (k < 0) throw std::domain_error("SparseOperator: negative power");
    SparseOperator r = identity();
    for (int j = 0; j < k; ++j) r = r * *this;
    return r;
}

std::vector<FockIndex> states_up_to(int arity, int cutoff) {
    std::vector<FockIndex> out;
    FockIndex cur(static_cast<std::size_t>(arity), 0);
    while (true) {
        out.push_back(cur);
        int pos = arity - 1;
        while (pos >= 0) {
            if (++cur[static_cast<std::size_t>(pos)] <= cutoff) break;
            cur[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<FockIndex> states_total_degree(int arity, int bound) {
    std::vector<FockIndex> out;
    for (const auto& idx : states_up_to(arity, bound)) {
        int total = 0;
        for (int m : idx) total += m;
        if (total <= bound) out.push_back(idx);
    }
    return out;
}

CheckReport sweep_relations(const std::string& report_name,
                            const std::map<std::string, std::string>& params,
                            const std::vector<OperatorRelation>& rels,
                            const std::vector<FockIndex>& states, int threads) {
    CheckReport rep;
    rep.name = report_name;
    rep.params = params;
    rep.params["relations"] = std::to_string(rels.size());

    const std::size_t total = rels.size() * states.size();
    std::vector<CheckReport> slots(total);
    parallel_for(
        total,
        [&](std::size_t item) {
            const OperatorRelation& rel = rels[item / states.size()];
            const FockIndex& idx = states[item % states.size()];
            FockVector lhs = rel.lhs.apply(idx);
            FockVector rhs = rel.rhs.apply(idx);
            slots[item].count();
            if (lhs != rhs) slots[item].fail(rel.name, index_str(idx), lhs.str(), rhs.str());
        },
        threads);
    for (const auto& sub : slots) rep.absorb(sub);
    return rep;
}

CheckReport verify_qosc_relations(int cutoff) {
    SparseOperator ap = SparseOperator::generator(Gen::APlus, 1);
    SparseOperator am = SparseOperator::generator(Gen::AMinus, 1);
    SparseOperator k = SparseOperator::generator(Gen::K, 1);
    SparseOperator kinv = SparseOperator::generator(Gen::KInv, 1);
    SparseOperator id = SparseOperator::identity();

    std::vector<OperatorRelation> rels;
    rels.push_back({"k k^-1 = 1", k * kinv, id});
    rels.push_back({"k^-1 k = 1", kinv * k, id});
    rels.push_back({"k a+ = q a+ k", k * ap, (ap * k).scaled(Scalar::q_pow(1))});
    rels.push_back({"k a- = q^-1 a- k", k * am, (am * k).scaled(Scalar::q_pow(-1))});
    rels.push_back({"a+ a- = 1 - q^-1 k^2", ap * am, id - (k * k).scaled(Scalar::q_pow(-1))});
    rels.push_back({"a- a+ = 1 - q k^2", am * ap, id - (k * k).scaled(Scalar::q_pow(1))});

    return sweep_relations("qosc-relations", {{"cutoff", std::to_string(cutoff)}}, rels,
                           states_up_to(1, cutoff), 1);
}

}  // namespace tetra
