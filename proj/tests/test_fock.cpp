#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tetra/fock.hpp"
#include "tetra/qseries.hpp"

using namespace tetra;

namespace {

FockVector sample_vector() {
    FockVector v;
    v.add({0}, Scalar(1));
    v.add({1}, Scalar::q_pow(1) + Scalar(2));
    v.add({3}, Scalar::u_pow(-3));
    return v;
}

}  // namespace

TEST_CASE("generator actions on basis states") {
    CHECK(apply_generator(Gen::APlus, 1, FockIndex{2}) == FockVector::basis({3}));
    // k|2> = q^(5/2)|2> = u^5 |2>
    FockVector k2 = apply_generator(Gen::K, 1, FockIndex{2});
    CHECK(k2.coeff({2}) == Scalar::u_pow(5));
    // a-|0> = 0
    CHECK(apply_generator(Gen::AMinus, 1, FockIndex{0}).is_zero());
    // a-|2> = (1-q^4)|1>
    LaurentPoly c(1);
    c.add_term(8, GaussianRational(-1));
    CHECK(apply_generator(Gen::AMinus, 1, FockIndex{2}).coeff({1}) == Scalar(c));
    // h|3> = 3|3>
    CHECK(apply_generator(Gen::H, 1, FockIndex{3}).coeff({3}) == Scalar(3));
    // multi-site: acts only on the named site
    FockVector w = apply_generator(Gen::APlus, 2, FockIndex{1, 1, 1});
    CHECK(w == FockVector::basis({1, 2, 1}));
    CHECK_THROWS_AS(apply_generator(Gen::K, 4, FockIndex{0, 0}), std::out_of_range);
}

TEST_CASE("pairing <m|m'> = (q^2;q^2)_m delta") {
    // <1|1> = 1 - q^2
    LaurentPoly c(1);
    c.add_term(4, GaussianRational(-1));
    CHECK(pairing({1}, FockVector::basis({1})) == Scalar(c));
    CHECK(pairing({1}, FockVector::basis({2})).is_zero());
    CHECK(pairing({0}, FockVector::basis({0})) == Scalar(1));
    CHECK(pairing_weight({2, 1}) == Scalar(q_pochhammer(4, 2) * q_pochhammer(4, 1)));
}

TEST_CASE("pairing transfers generators to the dual module") {
    FockVector v = sample_vector();
    for (int m = 1; m <= 6; ++m) {
        // <m| a+ = (1 - q^(2m)) <m-1|
        LaurentPoly c(1);
        c.add_term(4 * m, GaussianRational(-1));
        CHECK(pairing({m}, apply_generator(Gen::APlus, 1, v)) ==
              Scalar(c) * pairing({m - 1}, v));
        // <m| a- = <m+1|
        CHECK(pairing({m}, apply_generator(Gen::AMinus, 1, v)) == pairing({m + 1}, v));
        // <m| k = q^(m+1/2) <m|
        CHECK(pairing({m}, apply_generator(Gen::K, 1, v)) ==
              Scalar::u_pow(2 * m + 1) * pairing({m}, v));
    }
}

TEST_CASE("sparse operator algebra") {
    SparseOperator ap = SparseOperator::generator(Gen::APlus, 1);
    SparseOperator am = SparseOperator::generator(Gen::AMinus, 1);
    SparseOperator sum = ap.with_z_degree(2) + am.scaled(Scalar(0)).with_z_degree(2);
    CHECK(sum.z_degree() == 2);
    CHECK((ap.with_z_degree(1) * am.with_z_degree(-2)).z_degree() == -1);
    CHECK_THROWS_AS(ap.with_z_degree(1) + am.with_z_degree(0), std::logic_error);
    // zero operator absorbs and is degree-agnostic
    CHECK((SparseOperator::zero() + ap.with_z_degree(3)).z_degree() == 3);
    CHECK((SparseOperator::zero() * ap).is_zero_op());
    // linearity on a sample vector
    FockVector v = sample_vector();
    FockVector direct = (ap * am).apply(v);
    FockVector seq = ap.apply(am.apply(v));
    CHECK(direct == seq);
    // pow
    CHECK(ap.pow(3).apply(FockIndex{0}) == FockVector::basis({3}));
    CHECK(ap.pow(0).apply(v) == v);
}

TEST_CASE("h grading: [h, a^±] = ±a^±") {
    SparseOperator ap = SparseOperator::generator(Gen::APlus, 1);
    SparseOperator am = SparseOperator::generator(Gen::AMinus, 1);
    SparseOperator h = SparseOperator::generator(Gen::H, 1);
    for (int m = 0; m <= 6; ++m) {
        FockIndex idx{m};
        CHECK((h * ap - ap * h).apply(idx) == ap.apply(idx));
        CHECK((h * am - am * h).apply(idx) == am.apply(idx).scaled(Scalar(-1)));
    }
}

TEST_CASE("state sweeps") {
    CHECK(states_up_to(3, 2).size() == 27);
    CHECK(states_up_to(1, 5).size() == 6);
    CHECK(states_total_degree(3, 3).size() == 20);
    CHECK(states_total_degree(2, 0).size() == 1);
}

TEST_CASE("q-oscillator relations hold exactly") {
    CheckReport rep = verify_qosc_relations(8);
    CHECK(rep.pass);
    CHECK(rep.states_checked == 9 * 6);
    CHECK(rep.failure_count == 0);
}
