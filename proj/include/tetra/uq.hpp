#pragma once
/// The four quantum affine algebras parametrized by boundary orders
/// (s,t) in {1,2}^2: Cartan data, z-graded oscillator images of the
/// Chevalley generators on n Fock sites, coproducts on the doubled
/// space, and exact verifiers of all defining relations (including the
/// Serre relations and the cyclic interior-only variant).

#include <string>
#include <vector>

#include "tetra/fock.hpp"
#include "tetra/report.hpp"
#include "tetra/scalar.hpp"

namespace tetra {

struct AlgebraSpec {
    int s = 1;
    int t = 1;
    int n = 1;
    std::vector<std::vector<int>> cartan;  // (n+1) x (n+1)
    std::vector<int> q_labels;             // u-exponent of q_i per node

    std::string to_json() const;
};

/// Cartan matrix a_ij = 2 delta_ij - max(w_j/w_i, 1) delta_{|i-j|,1} from
/// node weights w_0 = s^2, w_n = t^2, interior 2 (w_i is the u-exponent
/// of q_i).  The rank-2 case n = 1 with s = t degenerates: both boundary
/// tails act on the same site and conjugation doubles, so a_01 = a_10 = -2
/// there (the affine rank-2 matrix), not the -1 the ratio suggests.
AlgebraSpec build_algebra(int s, int t, int n);

enum class UqGen { E, F, K, KInv };

struct GeneratorImage {
    UqGen kind;
    int node;
    SparseOperator op;  // z-degree +s for e_0, -s for f_0, 0 otherwise
};

/// Oscillator image of a Chevalley generator, acting on sites
/// site_offset+1 .. site_offset+n.
GeneratorImage pi_z(const AlgebraSpec& spec, UqGen kind, int node, int site_offset = 0);

/// Interior-node formulas read cyclically (node and neighbour site mod n):
/// images of the A^{(1)}_{n-1} generators, nodes 0..n-1.  Requires n >= 3
/// so that distinct nodes never share both sites.
GeneratorImage pi_z_cyclic(int n, UqGen kind, int node, int site_offset = 0);

enum class CoproductVariant { Delta, DeltaPrime };

/// One term X (x) Y of a coproduct image on the doubled space: X acts on
/// sites 1..n, Y on sites n+1..2n.  degree is the term's z-grading after
/// weighting the two legs.
struct TensorTerm {
    SparseOperator left;
    SparseOperator right;
    int degree = 0;

    /// The composed operator on the 2n-site space, tagged with degree.
    SparseOperator op() const { return (left * right).with_z_degree(degree); }
};

struct CoproductOperator {
    int n = 1;  // sites per leg
    std::vector<TensorTerm> terms;

    FockVector apply(const FockIndex& idx) const;
};

/// Coproduct image under pi_x (x) pi_y:
///   Delta e = 1 (x) e + e (x) k,   Delta f = f (x) 1 + k^-1 (x) f,
///   Delta k^(+-1) = k^(+-1) (x) k^(+-1);   Delta' swaps the legs.
/// Term degrees weight the intrinsic z-degree of the leg-1 factor by
/// x_leg_weight and of the leg-2 factor by y_leg_weight; (1, 0) realizes
/// the specialization (x, y) -> (z, 1).
CoproductOperator coproduct(const AlgebraSpec& spec, UqGen kind, int node,
                            CoproductVariant variant, int x_leg_weight = 1,
                            int y_leg_weight = 0);

/// All defining relations (k-inverses, k-commutations, k e k^-1 and
/// k f k^-1 scalings, [e_i, f_j], both Serre families with divided
/// powers), exactly, on all basis states of total degree <= degree_cutoff.
CheckReport verify_uq_relations(const AlgebraSpec& spec, int degree_cutoff, int threads = 0);

/// Same relation sweep for the cyclic images (Cartan of A^{(1)}_{n-1}).
CheckReport verify_uq_relations_cyclic(int n, int degree_cutoff, int threads = 0);

}  // namespace tetra
