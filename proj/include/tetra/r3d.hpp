#pragma once
/// The 3-dimensional R-matrix acting on triple tensor products of the
/// q-oscillator Fock space: exact matrix coefficients, state application,
/// and verifiers for its defining properties (involution, intertwining
/// relations, conservation, and the tetrahedron equation).

#include "tetra/fock.hpp"
#include "tetra/report.hpp"
#include "tetra/scalar.hpp"

namespace tetra {

/// Matrix coefficient R^{a,b,c}_{i,j,k}.  Vanishes unless a+b = i+j and
/// b+c = j+k.  Values are memoized; the table supports concurrent lookup
/// with one-time insertion.
Scalar r_coefficient(int a, int b, int c, int i, int j, int k);

/// Apply R to the three sites (s1, s2, s3) of a basis state or vector
/// (1-based site labels, distinct).
FockVector apply_r(int s1, int s2, int s3, const FockIndex& idx);
FockVector apply_r(int s1, int s2, int s3, const FockVector& v);

/// R(R|ijk>) = |ijk> for all triples with entries <= cutoff.
CheckReport verify_involution(int cutoff, int threads = 0);

/// The eight defining intertwining identities relating R to the
/// q-oscillator generators on the three tensor slots.
CheckReport verify_intertwining(int cutoff, int threads = 0);

/// [R, h1 + h2] = [R, h2 + h3] = 0.
CheckReport verify_conservation(int cutoff, int threads = 0);

/// R_124 R_135 R_236 R_456 = R_456 R_236 R_135 R_124 on six-fold states
/// with entries <= cutoff.
CheckReport verify_tetrahedron(int cutoff, int threads = 0);

}  // namespace tetra
