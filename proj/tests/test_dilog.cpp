#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "tetra/qdilog.hpp"

using namespace tetra;

namespace {
constexpr double kPi = 3.141592653589793238462643;
const Cplx kI(0.0, 1.0);

double dist(Cplx a, Cplx b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("context factories validate their regime conditions") {
    const QDilogContext st = make_strong_coupling_context(kPi / 5.0);
    CHECK(st.regime == DilogRegime::strong_coupling);
    CHECK(std::abs(std::abs(st.b) - 1.0) < 1e-15);
    CHECK(st.eta().real() == doctest::Approx(std::cos(kPi / 5.0)).epsilon(1e-14));
    CHECK(std::abs(st.eta().imag()) < 1e-15);

    const QDilogContext pd = make_product_context(Cplx(0.8, 0.3));
    CHECK(pd.regime == DilogRegime::product);
    CHECK((pd.b * pd.b).imag() > 0);

    CHECK_THROWS_AS(make_strong_coupling_context(0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_strong_coupling_context(kPi / 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_product_context(Cplx(-0.8, 0.3)), std::invalid_argument);
    CHECK_THROWS_AS(make_product_context(Cplx(0.8, -0.3)), std::invalid_argument);

    // The dual of strong coupling is still strong coupling; the dual of the
    // product regime is not a product regime (Im(b^{-2}) < 0).
    CHECK(st.dual().regime == DilogRegime::strong_coupling);
    CHECK(pd.dual().regime == DilogRegime::integral_only);
}

TEST_CASE("phi special values") {
    for (const QDilogContext& ctx : {default_strong_context(), default_product_context()}) {
        const Cplx b2 = ctx.b * ctx.b, bi2 = ctx.b_inv() * ctx.b_inv();
        // phi(0) = e^{i pi (b^2 + b^{-2}) / 24}.
        CHECK(dist(qdilog(Cplx(0.0), ctx), std::exp(kI * kPi * (b2 + bi2) / 24.0)) < 1e-11);
        // phi(-ib/2) / phi(ib/2) = 1 + e^{0} = 2, and likewise for 1/b.
        CHECK(dist(qdilog(-kI * ctx.b / 2.0, ctx) / qdilog(kI * ctx.b / 2.0, ctx), Cplx(2.0)) <
              1e-10);
        CHECK(dist(qdilog(-kI * ctx.b_inv() / 2.0, ctx) / qdilog(kI * ctx.b_inv() / 2.0, ctx),
                   Cplx(2.0)) < 1e-10);
    }
}

TEST_CASE("phi difference property at real samples") {
    const std::vector<double> zs{-0.6, -0.2, 0.0, 0.3, 0.7};
    const CheckReport strong = verify_qdilog_difference(default_strong_context(), zs, 1e-10);
    CHECK(strong.pass);
    CHECK(strong.states_checked == 10);
    const CheckReport prod = verify_qdilog_difference(default_product_context(), zs, 1e-10);
    CHECK(prod.pass);
}

TEST_CASE("phi is symmetric under b <-> 1/b") {
    const std::vector<double> zs{-0.4, 0.0, 0.3};
    CHECK(verify_qdilog_duality(default_strong_context(), zs, 1e-10).pass);
    CHECK(verify_qdilog_duality(default_product_context(), zs, 1e-10).pass);
}

TEST_CASE("phi inversion relation") {
    for (const QDilogContext& ctx : {default_strong_context(), default_product_context()}) {
        const Cplx c = kI * kPi * (ctx.b * ctx.b + ctx.b_inv() * ctx.b_inv()) / 12.0;
        for (double z : {0.2, -0.45, 0.0}) {
            const Cplx lhs = qdilog_log(Cplx(z), ctx) + qdilog_log(Cplx(-z), ctx);
            CHECK(dist(lhs, kI * kPi * z * z + c) < 1e-11);
        }
    }
}

TEST_CASE("phi is unimodular on the real line at strong coupling") {
    CHECK(verify_qdilog_unitarity(default_strong_context(), 9, 1e-12).pass);
    CHECK_THROWS_AS(verify_qdilog_unitarity(default_product_context(), 3, 1e-12),
                    std::invalid_argument);
}

TEST_CASE("product route matches the integral route") {
    const QDilogContext pd = default_product_context();
    // Pinned sample: the two independent evaluation routes must agree closely.
    CHECK(dist(qdilog_product(Cplx(0.3), pd), qdilog(Cplx(0.3), pd)) < 1e-10);
    CHECK(verify_product_route(pd, 1e-10).pass);
    CHECK_THROWS_AS(qdilog_product(Cplx(0.3), default_strong_context()), std::invalid_argument);
    CHECK_THROWS_AS(verify_product_route(default_strong_context(), 1e-10),
                    std::invalid_argument);
}

TEST_CASE("chi reflection ratio at a pinned sample") {
    const QDilogContext st = default_strong_context();
    const Cplx lhs = chi_b(Cplx(0.25), st) / chi_b(Cplx(-0.25), st);
    CHECK(dist(lhs, std::exp(-kPi * 0.25 * st.b_inv() / 2.0)) < 1e-8);
    CHECK(verify_chi_reflection(st, {-0.3, 0.15, 0.25}, 1e-8).pass);
    CHECK(verify_chi_reflection(default_product_context(), {0.25}, 1e-8).pass);
}

TEST_CASE("chi pair against phi ratio at a pinned sample") {
    const QDilogContext st = default_strong_context();
    const Cplx ieta = kI * st.eta();
    const Cplx lhs = chi_b(Cplx(0.4), st) * chi_b(Cplx(0.4), st.dual());
    const Cplx rhs = qdilog((Cplx(0.4) + ieta) / 2.0, st) / qdilog((Cplx(0.4) - ieta) / 2.0, st);
    CHECK(dist(lhs, rhs) < 1e-8);
    CHECK(verify_chi_phi_product(st, {0.4, -0.2}, 1e-8).pass);
}

TEST_CASE("chi half and full shift equations across both families") {
    const std::vector<double> ss{-0.35, -0.1, 0.0, 0.2, 0.45};
    CHECK(verify_chi_swap(default_strong_context(), ss, 1e-8).pass);
    CHECK(verify_chi_swap(default_product_context(), ss, 1e-8).pass);
}

TEST_CASE("shift ratio integrals at the symmetric point") {
    // At sigma = 0 the half-shift ratio is sqrt(i) for every b.
    for (const QDilogContext& ctx : {default_strong_context(), default_product_context()}) {
        const Cplx half = std::exp(chi_half_shift_ratio_log(Cplx(0.0), ctx));
        CHECK(dist(half, std::exp(kI * kPi / 4.0)) < 1e-10);
    }
    // The full-shift ratio at sigma = 0 squares to q_tilde.
    const QDilogContext st = default_strong_context();
    const Cplx full = std::exp(chi_full_shift_ratio_log(Cplx(0.0), st));
    CHECK(dist(full * full, st.q_tilde()) < 1e-10);
}

TEST_CASE("chi Fourier transform identities") {
    const QDilogContext st = default_strong_context();
    for (double lambda : {0.1, 0.2}) {
        const CheckReport rep = verify_chi_fourier_integrals(st, lambda, 1e-6);
        CHECK(rep.pass);
        CHECK(rep.states_checked == 3);
    }
}

TEST_CASE("contour offset independence") {
    CHECK(verify_contour_offset_independence(default_strong_context(), 1e-10).pass);
    CHECK(verify_contour_offset_independence(default_product_context(), 1e-10).pass);
}

TEST_CASE("kernel short-circuits non-conserved points to exact zero") {
    const QDilogContext st = default_strong_context();
    KernelPoint p;
    p.s1 = 0.2;
    p.s2 = -0.1;
    p.s3 = 0.15;
    p.s1p = 0.05;
    p.s2p = 0.05;
    p.s3p = 0.3;  // breaks s2 + s3 = s2' + s3'
    CHECK(p.conservation_defect() > 1e-3);
    const KernelResult r = kernel_eval(p, st);
    CHECK_FALSE(r.conserved);
    CHECK(r.value == Cplx(0.0, 0.0));
    CHECK(r.error == 0.0);
}

TEST_CASE("kernel is symmetric under b <-> 1/b and stable under refinement") {
    const QDilogContext st = default_strong_context();
    CHECK(verify_kernel_b_symmetry(st, 1e-8).pass);
    CHECK(verify_kernel_convergence(st, 1e-8).pass);
}

TEST_CASE("kernel lowering intertwining relation at a sample point") {
    const CheckReport rep = verify_kernel_shift_identity(default_strong_context(), 1e-5);
    CHECK(rep.pass);
    CHECK(rep.max_residual < 1e-5);
}

TEST_CASE("S element input validation and conservation") {
    const QDilogContext st = default_strong_context();
    CHECK_THROWS_AS(modular_S_element(0, 1, 0.1, 0.1, 0.1, 0.1, 0.1, false, st),
                    std::invalid_argument);
    CHECK_THROWS_AS(modular_S_element(1, 3, 0.1, 0.1, 0.1, 0.1, 0.1, false, st),
                    std::invalid_argument);
    const ModularSResult bad = modular_S_element(1, 1, 0.1, 0.15, 0.05, 0.1, 0.2, false, st);
    CHECK_FALSE(bad.conserved);
    CHECK(bad.value == Cplx(0.0, 0.0));
}

TEST_CASE("S element is stable under quadrature refinement") {
    const QDilogContext st = default_strong_context();
    const CheckReport rep = verify_modular_S_convergence(st, 0.1, 1e-6);
    CHECK(rep.pass);
    CHECK(rep.max_residual < 1e-6);
}

TEST_CASE("zigzag dressing is the undressed element times the boundary weight") {
    const QDilogContext st = default_strong_context();
    const double al = 0.15, be = 0.05, alp = 0.1, bep = 0.1;
    const ModularSResult plain = modular_S_element(1, 1, 0.1, al, be, alp, bep, false, st);
    const ModularSResult zig = modular_S_element(1, 1, 0.1, al, be, alp, bep, true, st);
    const Cplx w = std::exp(kPi * st.eta() * (al - bep));
    CHECK(dist(zig.value, plain.value * w) < 1e-12 * std::abs(plain.value));
}

TEST_CASE("S element transpose probe runs and is logged only") {
    const CheckReport rep = probe_modular_S_transpose(default_strong_context(), 0.1);
    CHECK(rep.pass);  // informational: never asserts a residual
    REQUIRE(rep.params.count("rel_difference") == 1);
    MESSAGE("S^{1,2} vs conj S^{2,1} relative difference: ",
            rep.params.at("rel_difference"));
}
