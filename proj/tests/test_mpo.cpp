#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "tetra/mpo.hpp"
#include "tetra/qseries.hpp"

using namespace tetra;

namespace {

Scalar one() { return Scalar(1); }

/// Vacuum-to-vacuum order-j element for boundary exponents (s, t),
/// written directly from the boundary normalizations: the R-chain on the
/// vacuum is free, so only (q^2;q^2)_j / ((q^{s^2};q^{s^2})_{j/s} (q^{t^2};q^{t^2})_{j/t})
/// survives, and only when s | j and t | j.
Scalar vacuum_oracle(int s, int t, int j) {
    if (j % s != 0 || j % t != 0) return Scalar();
    return Scalar(q_pochhammer(4, j)) * Scalar(q_pochhammer(2 * s * s, j / s)).inv() *
           Scalar(q_pochhammer(2 * t * t, j / t)).inv();
}

}  // namespace

TEST_CASE("boundary vector coefficients") {
    BoundaryVector c1 = boundary_vector(1);
    CHECK(c1.coeff(0) == one());
    CHECK(c1.coeff(1) == (one() - Scalar::q_pow(1)).inv());
    CHECK(c1.coeff(2) == ((one() - Scalar::q_pow(1)) * (one() - Scalar::q_pow(2))).inv());
    CHECK(c1.coeff(-1).is_zero());

    BoundaryVector c2 = boundary_vector(2);
    CHECK(c2.coeff(0) == one());
    CHECK(c2.coeff(1).is_zero());  // off the even support
    CHECK(c2.coeff(2) == (one() - Scalar::q_pow(4)).inv());
    CHECK(c2.coeff(4) == ((one() - Scalar::q_pow(4)) * (one() - Scalar::q_pow(8))).inv());

    CHECK_THROWS_AS(boundary_vector(3), std::invalid_argument);
}

TEST_CASE("single-site eigenvector conditions for both boundary vectors") {
    CheckReport r1 = verify_chi_conditions(1, 8);
    CHECK(r1.pass);
    CHECK(r1.states_checked == 4 * 9);
    CheckReport r2 = verify_chi_conditions(2, 8);
    CHECK(r2.pass);
    CHECK(r2.states_checked == 2 * 9);

    // s = 2 at |1>: a+ contributes chi_0 = 1, a- contributes chi_2 (1 - q^4) = 1.
    BoundaryVector c2 = boundary_vector(2);
    CHECK(c2.coeff(0) == one());
    CHECK(c2.coeff(2) * (one() - Scalar::q_pow(4)) == one());
}

TEST_CASE("triple boundary vector is fixed by R, ket and bra side") {
    for (int s : {1, 2}) {
        CheckReport rep = verify_boundary_fixed(s, 4);
        CAPTURE(s);
        CHECK(rep.pass);
        CHECK(rep.states_checked == 2 * 125);
        CHECK(rep.failure_count == 0);
    }
}

TEST_CASE("vacuum-to-vacuum series matches the closed product form") {
    ZSeries S = build_S(1, 1, 1, z_orders_up_to(3), 3);
    for (int j = 0; j <= 3; ++j) {
        CAPTURE(j);
        CHECK(S.op(j).apply({0, 0}).coeff({0, 0}) == vacuum_oracle(1, 1, j));
    }
    // order 1 explicitly: (1 + q) / (1 - q)
    CHECK(S.op(1).apply({0, 0}).coeff({0, 0}) ==
          (one() + Scalar::q_pow(1)) * (one() - Scalar::q_pow(1)).inv());

    // s = 2: odd orders vanish identically, order 2 gives 1 / (1 - q)
    ZSeries S21 = build_S(2, 1, 1, z_orders_up_to(2), 2);
    CHECK(S21.op(1).is_zero_op());
    CHECK(S21.op(1).apply({1, 1}).is_zero());
    CHECK(S21.op(2).apply({0, 0}).coeff({0, 0}) == (one() - Scalar::q_pow(1)).inv());
    CHECK(S21.op(2).apply({0, 0}).coeff({0, 0}) == vacuum_oracle(2, 1, 2));

    ZSeries S22 = build_S(2, 2, 1, z_orders_up_to(2), 2);
    CHECK(S22.op(2).apply({0, 0}).coeff({0, 0}) == vacuum_oracle(2, 2, 2));
}

TEST_CASE("one-particle matrix elements, worked by hand") {
    ZSeries S = build_S(1, 1, 1, z_orders_up_to(1), 3);
    // S_0 |0,1> = -q |0,1>
    CHECK(S.op(0).apply({0, 1}).coeff({0, 1}) == -Scalar::q_pow(1));
    CHECK(S.op(0).apply({0, 1}).coeff({1, 0}).is_zero());
    // S_0 |1,0> = |1,0> + (1+q) |0,1>
    FockVector v = S.op(0).apply({1, 0});
    CHECK(v.coeff({1, 0}) == one());
    CHECK(v.coeff({0, 1}) == one() + Scalar::q_pow(1));
    // S_1 |0,1> = (1+q) |1,0> - q^2 (1+q)/(1-q) |0,1>
    FockVector w = S.op(1).apply({0, 1});
    CHECK(w.coeff({1, 0}) == one() + Scalar::q_pow(1));
    CHECK(w.coeff({0, 1}) ==
          -Scalar::q_pow(2) * (one() + Scalar::q_pow(1)) * (one() - Scalar::q_pow(1)).inv());
}

TEST_CASE("matrix elements conserve each site pair") {
    ZSeries S = build_S(1, 1, 2, z_orders_up_to(2), 2);
    for (const FockIndex& in : states_up_to(4, 2)) {
        for (int j = 0; j <= 2; ++j) {
            const FockVector img = S.op(j).apply(in);
            for (const auto& [out, coeff] : img.terms()) {
                CAPTURE(index_str(in));
                CAPTURE(index_str(out));
                CHECK(out[0] + out[2] == in[0] + in[2]);
                CHECK(out[1] + out[3] == in[1] + in[3]);
            }
        }
    }
}

TEST_CASE("coefficients are independent of the sweep cutoff") {
    ZSeries a = build_S(1, 2, 1, z_orders_up_to(2), 2);
    ZSeries b = build_S(1, 2, 1, z_orders_up_to(2), 5);
    for (const FockIndex& in : states_up_to(2, 3)) {
        for (int j = 0; j <= 2; ++j) {
            CAPTURE(index_str(in));
            CHECK(a.op(j).apply(in) == b.op(j).apply(in));
        }
    }
}

TEST_CASE("ZSeries exposes only retained orders") {
    ZSeries S = build_S(1, 1, 1, {0, 2}, 2);
    CHECK(S.has_order(2));
    CHECK(!S.has_order(1));
    CHECK_THROWS_AS(S.op(1), std::out_of_range);
    CHECK_THROWS_AS(build_S(0, 1, 1, {0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_S(1, 1, 0, {0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_S(1, 1, 1, {-1}, 2), std::invalid_argument);
}

TEST_CASE("zig-zag operator is diagonal with unit vacuum normalization") {
    SparseOperator K = zigzag_K(2);
    CHECK(K.apply({0, 0}) == FockVector::basis({0, 0}));
    CHECK(K.apply({1, 0}).coeff({1, 0}) == Scalar::i() * Scalar::u_pow(1));
    CHECK(K.apply({1, 1}).coeff({1, 1}) == -Scalar::q_pow(1));  // (i u)^2
    SparseOperator KInv = zigzag_K_inv(2);
    for (const FockIndex& m : states_up_to(2, 2))
        CHECK((K * KInv).apply(m) == FockVector::basis(m));
    CHECK_THROWS_AS(zigzag_K(1).apply({0, 0}), std::invalid_argument);
}

TEST_CASE("zig-zag transform rescales elements by the occupation change") {
    ZSeries S = build_S(1, 1, 1, z_orders_up_to(1), 3);
    ZSeries Sh = zigzag_transform(S);
    // vacuum elements unchanged
    for (int j = 0; j <= 1; ++j)
        CHECK(Sh.op(j).apply({0, 0}).coeff({0, 0}) == S.op(j).apply({0, 0}).coeff({0, 0}));
    // |1,0> -> |1,0>: alpha grows by one, beta unchanged: factor i u
    CHECK(Sh.op(0).apply({1, 0}).coeff({1, 0}) == Scalar::i() * Scalar::u_pow(1));
    // |1,0> -> |0,1>: alpha out 0, beta in 0: unchanged
    CHECK(Sh.op(0).apply({1, 0}).coeff({0, 1}) == S.op(0).apply({1, 0}).coeff({0, 1}));
    // |0,1> -> |0,1>: factor (i u)^(-1); -q (i u)^(-1) = i u
    CHECK(Sh.op(0).apply({0, 1}).coeff({0, 1}) == Scalar::i() * Scalar::u_pow(1));
}

TEST_CASE("every retained order commutes with the total zig-zag charge") {
    CheckReport r11 = verify_zigzag_commute(build_S(1, 1, 1, z_orders_up_to(2), 3));
    CHECK(r11.pass);
    CHECK(r11.states_checked == 3 * 16);
    CheckReport r21 = verify_zigzag_commute(build_S(2, 1, 1, z_orders_up_to(2), 2));
    CHECK(r21.pass);
}

TEST_CASE("Yang-Baxter equation per bivariate order") {
    CheckReport rep = verify_ybe(1, 1, 1, 2, 2);
    CHECK(rep.pass);
    // 6 bivariate orders with x+y degree <= 2, 27 tripled states
    CHECK(rep.states_checked == 6 * 27);
    CHECK(rep.failure_count == 0);

    CheckReport rep21 = verify_ybe(2, 1, 1, 2, 2);
    CHECK(rep21.pass);
}

TEST_CASE("coproduct intertwining of the transformed series, one site pair") {
    CheckReport rep = verify_symmetry(1, 1, 1, z_orders_up_to(3), 3);
    CHECK(rep.pass);
    // 2 nodes x 4 generators x 4 orders, 16 states
    CHECK(rep.states_checked == 32 * 16);
    CHECK(rep.failure_count == 0);

    for (auto [s, t] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        CheckReport r = verify_symmetry(s, t, 1, z_orders_up_to(2), 2);
        CAPTURE(s);
        CAPTURE(t);
        CHECK(r.pass);
    }
}

TEST_CASE("coproduct intertwining for two site pairs") {
    CheckReport rep = verify_symmetry(1, 1, 2, z_orders_up_to(2), 2);
    CHECK(rep.pass);
    // 3 nodes x 4 generators x 3 orders, 81 states
    CHECK(rep.states_checked == 36 * 81);
}

TEST_CASE("parallel sweeps reproduce the serial reports") {
    CheckReport serial = verify_ybe(1, 1, 1, 2, 2, 1);
    CheckReport par = verify_ybe(1, 1, 1, 2, 2, 3);
    CHECK(serial.to_json() == par.to_json());
    CheckReport bserial = verify_boundary_fixed(1, 3, 1);
    CheckReport bpar = verify_boundary_fixed(1, 3, 3);
    CHECK(bserial.to_json() == bpar.to_json());
}
