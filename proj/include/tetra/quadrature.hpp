#pragma once
/// Adaptive complex-valued quadrature: Gauss-Kronrod (G7,K15) on finite
/// segments plus marching-panel integration of rays and whole lines whose
/// integrands eventually decay exponentially.  Error estimates fold in the
/// truncated-tail bounds so callers can assert absolute tolerances.

#include <complex>
#include <functional>

namespace tetra {

using Cplx = std::complex<double>;
using RealIntegrand = std::function<Cplx(double)>;

struct QuadratureOptions {
    double abs_tol = 1e-11;      // target absolute error per call
    int max_subdivisions = 400;  // adaptive split budget per segment
    double panel_width = 1.0;    // marching panel length
    double max_range = 300.0;    // marching abort distance
};

struct QuadratureResult {
    Cplx value{0.0, 0.0};
    double error = 0.0;  // estimated absolute error, tail bounds included
    bool converged = false;
    long evaluations = 0;

    QuadratureResult& operator+=(const QuadratureResult& o);
};

/// Adaptive Gauss-Kronrod integral of f over [a, b].
QuadratureResult integrate_segment(const RealIntegrand& f, double a, double b,
                                   const QuadratureOptions& opt = {});

/// Integral of f over [start, +inf) when direction = +1, or (-inf, start]
/// when direction = -1, both with the standard ascending orientation.
/// Panels of fixed width march outward until the frontier samples imply a
/// tail bound below abs_tol/10; decay_rate r > 0 must bound the integrand's
/// eventual decay |f(t)| <~ C e^{-r |t|}, and the tail beyond the frontier
/// is bounded by 2 max|f(frontier samples)| / r.
QuadratureResult integrate_ray(const RealIntegrand& f, double start, int direction,
                               double decay_rate, const QuadratureOptions& opt = {});

/// Integral over the whole real line with (possibly different) decay rates
/// toward -inf and +inf.
QuadratureResult integrate_line(const RealIntegrand& f, double decay_rate_neg,
                                double decay_rate_pos, const QuadratureOptions& opt = {});

}  // namespace tetra
