#include "tetra/uq.hpp"

#include <json.hpp>

#include <functional>
#include <stdexcept>
#include <utility>

#include "tetra/qseries.hpp"

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

// d at base p = u^l: p/(p - p^-1)^2.
Scalar d_const(int l) {
    Scalar p = Scalar::u_pow(l);
    Scalar diff = p - p.inv();
    return p / (diff * diff);
}

}  // namespace

std::string AlgebraSpec::to_json() const {
    nlohmann::ordered_json j;
    j["s"] = s;
    j["t"] = t;
    j["n"] = n;
    j["cartan"] = cartan;
    j["q_labels_u_exp"] = q_labels;
    return j.dump(2);
}

AlgebraSpec build_algebra(int s, int t, int n) {
    if ((s != 1 && s != 2) || (t != 1 && t != 2))
        throw std::invalid_argument("build_algebra: s and t must be 1 or 2");
    if (n < 1) throw std::invalid_argument("build_algebra: n must be >= 1");
    AlgebraSpec spec;
    spec.s = s;
    spec.t = t;
    spec.n = n;
    spec.q_labels.assign(static_cast<std::size_t>(n) + 1, 2);
    spec.q_labels.front() = s * s;
    spec.q_labels.back() = t * t;
    spec.cartan.assign(static_cast<std::size_t>(n) + 1,
                       std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 0; i <= n; ++i) {
        spec.cartan[i][i] = 2;
        for (int j : {i - 1, i + 1}) {
            if (j < 0 || j > n) continue;
            const int wi = spec.q_labels[i], wj = spec.q_labels[j];
            spec.cartan[i][j] = -(wj > wi ? wj / wi : 1);
        }
    }
    if (n == 1 && s == t) spec.cartan[0][1] = spec.cartan[1][0] = -2;
    return spec;
}

GeneratorImage pi_z(const AlgebraSpec& spec, UqGen kind, int node, int site_offset) {
    const int n = spec.n, s = spec.s, t = spec.t;
    if (node < 0 || node > n) throw std::out_of_range("pi_z: node out of range");
    auto ap = [&](int i) { return SparseOperator::generator(Gen::APlus, site_offset + i); };
    auto am = [&](int i) { return SparseOperator::generator(Gen::AMinus, site_offset + i); };
    auto kk = [&](int i) { return SparseOperator::generator(Gen::K, site_offset + i); };
    auto ki = [&](int i) { return SparseOperator::generator(Gen::KInv, site_offset + i); };

    SparseOperator op;
    if (node == 0) {
        switch (kind) {
            case UqGen::E:  // z^s d_s (a+_1)^s
                op = ap(1).pow(s).scaled(d_const(s * s)).with_z_degree(s);
                break;
            case UqGen::F:  // z^-s i^(s^2) (a-_1)^s k_1^-s
                op = (am(1).pow(s) * ki(1).pow(s))
                         .scaled(Scalar(i_pow(s * s)))
                         .with_z_degree(-s);
                break;
            case UqGen::K:  // (i k_1)^s
                op = kk(1).pow(s).scaled(Scalar(i_pow(s)));
                break;
            case UqGen::KInv:
                op = ki(1).pow(s).scaled(Scalar(i_pow(-s)));
                break;
        }
    } else if (node == n) {
        switch (kind) {
            case UqGen::E:  // i^(t^2) d_t (a-_n)^t k_n^-t
                op = (am(n).pow(t) * ki(n).pow(t)).scaled(Scalar(i_pow(t * t)) * d_const(t * t));
                break;
            case UqGen::F:  // (a+_n)^t
                op = ap(n).pow(t);
                break;
            case UqGen::K:  // (-i k_n^-1)^t
                op = ki(n).pow(t).scaled(Scalar(i_pow(-t)));
                break;
            case UqGen::KInv:
                op = kk(n).pow(t).scaled(Scalar(i_pow(t)));
                break;
        }
    } else {
        switch (kind) {
            case UqGen::E:  // d a-_i a+_{i+1} k_i^-1
                op = (am(node) * ap(node + 1) * ki(node)).scaled(d_const(2));
                break;
            case UqGen::F:  // a+_i a-_{i+1} k_{i+1}^-1
                op = ap(node) * am(node + 1) * ki(node + 1);
                break;
            case UqGen::K:  // k_i^-1 k_{i+1}
                op = ki(node) * kk(node + 1);
                break;
            case UqGen::KInv:
                op = kk(node) * ki(node + 1);
                break;
        }
    }
    return {kind, node, op};
}

GeneratorImage pi_z_cyclic(int n, UqGen kind, int node, int site_offset) {
    if (n < 3) throw std::invalid_argument("pi_z_cyclic: n must be >= 3");
    if (node < 0 || node >= n) throw std::out_of_range("pi_z_cyclic: node out of range");
    const int s1 = node == 0 ? n : node;  // site carrying the node label
    const int s2 = s1 % n + 1;            // its cyclic successor
    auto gen = [&](Gen g, int i) { return SparseOperator::generator(g, site_offset + i); };
    SparseOperator op;
    switch (kind) {
        case UqGen::E:
            op = (gen(Gen::AMinus, s1) * gen(Gen::APlus, s2) * gen(Gen::KInv, s1))
                     .scaled(d_const(2));
            break;
        case UqGen::F:
            op = gen(Gen::APlus, s1) * gen(Gen::AMinus, s2) * gen(Gen::KInv, s2);
            break;
        case UqGen::K:
            op = gen(Gen::KInv, s1) * gen(Gen::K, s2);
            break;
        case UqGen::KInv:
            op = gen(Gen::K, s1) * gen(Gen::KInv, s2);
            break;
    }
    return {kind, node, op};
}

FockVector CoproductOperator::apply(const FockIndex& idx) const {
    FockVector out;
    for (const auto& term : terms) out += term.op().apply(idx);
    return out;
}

CoproductOperator coproduct(const AlgebraSpec& spec, UqGen kind, int node,
                            CoproductVariant variant, int x_leg_weight, int y_leg_weight) {
    struct Leg {
        bool identity;
        UqGen g;
    };
    std::vector<std::pair<Leg, Leg>> shape;
    switch (kind) {
        case UqGen::E:  // 1 (x) e + e (x) k
            shape = {{{true, kind}, {false, UqGen::E}}, {{false, UqGen::E}, {false, UqGen::K}}};
            break;
        case UqGen::F:  // f (x) 1 + k^-1 (x) f
            shape = {{{false, UqGen::F}, {true, kind}}, {{false, UqGen::KInv}, {false, UqGen::F}}};
            break;
        default:  // group-like
            shape = {{{false, kind}, {false, kind}}};
            break;
    }
    if (variant == CoproductVariant::DeltaPrime)
        for (auto& p : shape) std::swap(p.first, p.second);

    CoproductOperator cop;
    cop.n = spec.n;
    for (const auto& [l, r] : shape) {
        TensorTerm term;
        int dl = 0, dr = 0;
        if (l.identity) {
            term.left = SparseOperator::identity();
        } else {
            term.left = pi_z(spec, l.g, node, 0).op;
            dl = term.left.z_degree();
        }
        if (r.identity) {
            term.right = SparseOperator::identity();
        } else {
            term.right = pi_z(spec, r.g, node, spec.n).op;
            dr = term.right.z_degree();
        }
        term.degree = x_leg_weight * dl + y_leg_weight * dr;
        cop.terms.push_back(std::move(term));
    }
    return cop;
}

namespace {

std::vector<OperatorRelation> algebra_relations(
    const std::function<SparseOperator(UqGen, int)>& img,
    const std::vector<std::vector<int>>& cartan, const std::vector<int>& q_labels) {
    const int nodes = static_cast<int>(q_labels.size());
    const SparseOperator id = SparseOperator::identity();
    std::vector<OperatorRelation> rels;
    auto nm = [](const char* a, int i) { return std::string(a) + std::to_string(i); };

    for (int i = 0; i < nodes; ++i) {
        rels.push_back({nm("k", i) + " " + nm("k", i) + "^-1 = 1",
                        img(UqGen::K, i) * img(UqGen::KInv, i), id});
        rels.push_back({nm("k", i) + "^-1 " + nm("k", i) + " = 1",
                        img(UqGen::KInv, i) * img(UqGen::K, i), id});
    }
    for (int i = 0; i < nodes; ++i)
        for (int j = i + 1; j < nodes; ++j)
            rels.push_back({"[" + nm("k", i) + ", " + nm("k", j) + "] = 0",
                            img(UqGen::K, i) * img(UqGen::K, j),
                            img(UqGen::K, j) * img(UqGen::K, i)});
    for (int i = 0; i < nodes; ++i) {
        for (int j = 0; j < nodes; ++j) {
            const Scalar qa = Scalar::u_pow(q_labels[i] * cartan[i][j]);
            rels.push_back({nm("k", i) + " " + nm("e", j) + " " + nm("k", i) + "^-1 = " +
                                nm("q", i) + "^(" + std::to_string(cartan[i][j]) + ") " +
                                nm("e", j),
                            img(UqGen::K, i) * img(UqGen::E, j) * img(UqGen::KInv, i),
                            img(UqGen::E, j).scaled(qa)});
            rels.push_back({nm("k", i) + " " + nm("f", j) + " " + nm("k", i) + "^-1 = " +
                                nm("q", i) + "^(" + std::to_string(-cartan[i][j]) + ") " +
                                nm("f", j),
                            img(UqGen::K, i) * img(UqGen::F, j) * img(UqGen::KInv, i),
                            img(UqGen::F, j).scaled(qa.inv())});
        }
    }
    for (int i = 0; i < nodes; ++i) {
        for (int j = 0; j < nodes; ++j) {
            SparseOperator lhs =
                img(UqGen::E, i) * img(UqGen::F, j) - img(UqGen::F, j) * img(UqGen::E, i);
            SparseOperator rhs;
            std::string name;
            if (i == j) {
                const Scalar qi = Scalar::u_pow(q_labels[i]);
                rhs = (img(UqGen::K, i) - img(UqGen::KInv, i)).scaled((qi - qi.inv()).inv());
                name = "[" + nm("e", i) + ", " + nm("f", i) + "] = (" + nm("k", i) + " - " +
                       nm("k", i) + "^-1)/(" + nm("q", i) + " - " + nm("q", i) + "^-1)";
            } else {
                rhs = SparseOperator::zero();
                name = "[" + nm("e", i) + ", " + nm("f", j) + "] = 0";
            }
            rels.push_back({name, lhs, rhs});
        }
    }
    // Serre: sum_v (-1)^v x_i^((N-v)) x_j x_i^((v)) = 0 with N = 1 - a_ij,
    // divided powers x^((v)) = x^v/[v]_{q_i}!.
    for (int i = 0; i < nodes; ++i) {
        for (int j = 0; j < nodes; ++j) {
            if (i == j) continue;
            const int N = 1 - cartan[i][j];
            for (UqGen g : {UqGen::E, UqGen::F}) {
                SparseOperator sum = SparseOperator::zero();
                for (int v = 0; v <= N; ++v) {
                    Scalar coef = (q_integer_factorial(N - v, q_labels[i]) *
                                   q_integer_factorial(v, q_labels[i]))
                                      .inv();
                    if (v % 2 == 1) coef = Scalar(-1) * coef;
                    sum = sum +
                          (img(g, i).pow(N - v) * img(g, j) * img(g, i).pow(v)).scaled(coef);
                }
                const char* x = g == UqGen::E ? "e" : "f";
                rels.push_back({std::string("Serre(") + x + "; i=" + std::to_string(i) +
                                    ", j=" + std::to_string(j) + ", N=" + std::to_string(N) + ")",
                                sum, SparseOperator::zero()});
            }
        }
    }
    return rels;
}

}  // namespace

CheckReport verify_uq_relations(const AlgebraSpec& spec, int degree_cutoff, int threads) {
    auto img = [&spec](UqGen g, int node) { return pi_z(spec, g, node).op; };
    return sweep_relations("uq-relations",
                           {{"s", std::to_string(spec.s)},
                            {"t", std::to_string(spec.t)},
                            {"n", std::to_string(spec.n)},
                            {"degree_cutoff", std::to_string(degree_cutoff)}},
                           algebra_relations(img, spec.cartan, spec.q_labels),
                           states_total_degree(spec.n, degree_cutoff), threads);
}

CheckReport verify_uq_relations_cyclic(int n, int degree_cutoff, int threads) {
    if (n < 3) throw std::invalid_argument("verify_uq_relations_cyclic: n must be >= 3");
    std::vector<std::vector<int>> cartan(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        cartan[i][i] = 2;
        cartan[i][(i + 1) % n] = -1;
        cartan[i][(i + n - 1) % n] = -1;
    }
    std::vector<int> q_labels(n, 2);
    auto img = [n](UqGen g, int node) { return pi_z_cyclic(n, g, node).op; };
    return sweep_relations("uq-relations-cyclic",
                           {{"n", std::to_string(n)},
                            {"degree_cutoff", std::to_string(degree_cutoff)}},
                           algebra_relations(img, cartan, q_labels),
                           states_total_degree(n, degree_cutoff), threads);
}

}  // namespace tetra
