#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "tetra/quadrature.hpp"

using namespace tetra;

namespace {
constexpr double kPi = 3.141592653589793238462643;
}

TEST_CASE("segment rule integrates smooth functions to tolerance") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-12;

    auto cubic = integrate_segment([](double t) { return Cplx(t * t * t, 0.0); }, 0.0, 1.0, opt);
    CHECK(cubic.converged);
    CHECK(std::abs(cubic.value - Cplx(0.25, 0.0)) < 1e-12);

    // int_0^pi sin t dt = 2, imaginary part carries int_0^pi cos t dt = 0.
    auto trig = integrate_segment([](double t) { return Cplx(std::sin(t), std::cos(t)); }, 0.0,
                                  kPi, opt);
    CHECK(trig.converged);
    CHECK(std::abs(trig.value - Cplx(2.0, 0.0)) < 1e-11);
}

TEST_CASE("segment rule subdivides a sharp peak") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-11;
    // int_-1^1 dt/(t^2 + 1e-4) = 2 atan(100)/0.01.
    auto peak = integrate_segment([](double t) { return Cplx(1.0 / (t * t + 1e-4), 0.0); }, -1.0,
                                  1.0, opt);
    const double exact = 2.0 * std::atan(100.0) / 0.01;
    CHECK(peak.converged);
    CHECK(std::abs(peak.value.real() - exact) < 1e-8 * exact);
}

TEST_CASE("ray marching handles exponential decay with tail bound") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-11;

    auto decay = integrate_ray([](double t) { return Cplx(std::exp(-3.0 * t), 0.0); }, 0.0, +1,
                               3.0, opt);
    CHECK(decay.converged);
    CHECK(std::abs(decay.value - Cplx(1.0 / 3.0, 0.0)) < 1e-10);

    // int_0^inf e^-t sin(5t) dt = 5/26.
    auto osc = integrate_ray([](double t) { return Cplx(std::exp(-t) * std::sin(5.0 * t), 0.0); },
                             0.0, +1, 1.0, opt);
    CHECK(osc.converged);
    CHECK(std::abs(osc.value - Cplx(5.0 / 26.0, 0.0)) < 1e-10);

    auto left = integrate_ray([](double t) { return Cplx(std::exp(2.0 * t), 0.0); }, -1.0, -1,
                              2.0, opt);
    CHECK(left.converged);
    CHECK(std::abs(left.value - Cplx(0.5 * std::exp(-2.0), 0.0)) < 1e-10);
}

TEST_CASE("line integration matches Gaussian and two-sided decay oracles") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-11;

    auto gauss = integrate_line([](double t) { return Cplx(std::exp(-t * t), 0.0); }, 1.0, 1.0,
                                opt);
    CHECK(gauss.converged);
    CHECK(std::abs(gauss.value.real() - std::sqrt(kPi)) < 1e-10);

    // int_R e^{-t^2 + it} dt = sqrt(pi) e^{-1/4}.
    auto shifted = integrate_line(
        [](double t) { return std::exp(Cplx(-t * t, t)); }, 1.0, 1.0, opt);
    CHECK(shifted.converged);
    CHECK(std::abs(shifted.value - Cplx(std::sqrt(kPi) * std::exp(-0.25), 0.0)) < 1e-10);

    // int_R e^{-|t|} cos t dt = 1.
    auto lap = integrate_line(
        [](double t) { return Cplx(std::exp(-std::abs(t)) * std::cos(t), 0.0); }, 1.0, 1.0, opt);
    CHECK(lap.converged);
    CHECK(std::abs(lap.value - Cplx(1.0, 0.0)) < 1e-9);
}

TEST_CASE("ray marching reports failure beyond the abort range") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-12;
    opt.max_range = 5.0;
    auto slow = integrate_ray([](double t) { return Cplx(std::exp(-0.01 * t), 0.0); }, 0.0, +1,
                              0.01, opt);
    CHECK_FALSE(slow.converged);
    CHECK(slow.error > 1e-12);
}

TEST_CASE("invalid ray arguments throw") {
    CHECK_THROWS_AS(integrate_ray([](double) { return Cplx(0, 0); }, 0.0, +2, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_ray([](double) { return Cplx(0, 0); }, 0.0, +1, 0.0),
                    std::invalid_argument);
}
