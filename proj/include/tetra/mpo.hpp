#pragma once
/// Boundary vectors, the matrix-product operator S(z) on the doubled Fock
/// space as an exact z-power series, the zig-zag transform, and verifiers
/// for the boundary fixed-point property, the Yang-Baxter equation, and
/// the coproduct intertwining of the transformed series.

#include <map>
#include <vector>

#include "tetra/fock.hpp"
#include "tetra/report.hpp"
#include "tetra/scalar.hpp"
#include "tetra/uq.hpp"

namespace tetra {

/// chi^(s): supported on indices s*m with coefficient 1/(p;p)_m, p = q^(s^2).
struct BoundaryVector {
    int s = 1;
    Scalar coeff(int index) const;
};

BoundaryVector boundary_vector(int s);

/// The defining single-site conditions, coefficientwise up to `cutoff`:
///   a^(+-) |chi1> = (1 -+ q^(-+1/2) k)|chi1>,   <chi1| a^(+-) = <chi1|(1 +- q^(+-1/2) k),
///   a^+ |chi2> = a^- |chi2>,                    <chi2| a^+ = <chi2| a^-.
CheckReport verify_chi_conditions(int s, int cutoff);

/// R(chi (x) chi (x) chi) = chi (x) chi (x) chi, and the bra-side mirror
/// through the pairing, coefficientwise on output triples <= out_cutoff.
CheckReport verify_boundary_fixed(int s, int out_cutoff, int threads = 0);

/// S(z) restricted to its retained z-orders.  Each order's operator is
/// exact on every basis state (coefficients are closed finite products);
/// fock_cutoff only records the sweep bound the series was built for.
struct ZSeries {
    int s = 1, t = 1, n = 1;
    int fock_cutoff = 1;
    std::map<int, SparseOperator> orders;

    bool has_order(int j) const { return orders.count(j) != 0; }
    const SparseOperator& op(int j) const;  // throws std::out_of_range
};

/// Assemble S^{s,t}(z) on n+n sites for the given z-orders.  The order-j
/// operator pairs the single bra index j/s against the ket boundary index
/// fixed by conservation through the R-chain; orders not divisible by s
/// are retained as zero operators.
ZSeries build_S(int s, int t, int n, const std::vector<int>& z_orders, int fock_cutoff);

/// Diagonal (i q^(1/2))^(m_1+...+m_sites); fixes the vacuum.
SparseOperator zigzag_K(int sites);
SparseOperator zigzag_K_inv(int sites);

/// S -> (K (x) 1) S (1 (x) K^-1), orderwise.
ZSeries zigzag_transform(const ZSeries& S);

/// [S_j, K (x) K] = 0 for every retained order, swept on states up to the
/// series' fock_cutoff.
CheckReport verify_zigzag_commute(const ZSeries& S, int threads = 0);

/// S_ab(x) S_ac(xy) S_bc(y) = S_bc(y) S_ac(xy) S_ab(x) on the tripled
/// space, per bivariate coefficient with x-order + y-order <= total_order.
CheckReport verify_ybe(int s, int t, int n, int total_order, int fock_cutoff, int threads = 0);

/// Delta'(g) Shat(z) = Shat(z) Delta(g) for every Chevalley generator g,
/// per retained z-order, with legs specialized to (z, 1); e_0/f_0 degrees
/// shift which Shat order each coproduct term multiplies.
CheckReport verify_symmetry(int s, int t, int n, const std::vector<int>& z_orders,
                            int fock_cutoff, int threads = 0);

std::vector<int> z_orders_up_to(int max_order);

}  // namespace tetra
