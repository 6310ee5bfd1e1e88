#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psl/serialization.hpp"
#include "psl/errors.hpp"
#include "tests/test_util.hpp"

using namespace psl;
using namespace psl::testutil;

TEST_CASE("algebraic numbers round-trip") {
    for (const auto& a : {phi(), sqrt2(), plastic(), zeta6(), imag_unit(), rat(3, 2),
                          rat(-7), rat(0)}) {
        Json j = algebraic_to_json(a);
        AlgebraicNumber back = algebraic_from_json(j);
        CHECK(alg_equals(a, back));
        CHECK(algebraic_to_json(back) == j);
    }
    // shorthand forms
    CHECK(alg_equals(algebraic_from_json(Json("3/2")), rat(3, 2)));
    CHECK(alg_equals(algebraic_from_json(Json(5)), rat(5)));
    CHECK(alg_equals(algebraic_from_json(Json{{"rational", "-2/3"}}), rat(-2, 3)));
    // linear minpoly without a box is allowed
    Json lin{{"minpoly", Json::array({-3, 2})}};
    CHECK(alg_equals(algebraic_from_json(lin), rat(3, 2)));
}

TEST_CASE("rejections") {
    // degree > 1 without a box
    Json no_box{{"minpoly", Json::array({-1, -1, 1})}};
    CHECK_THROWS_AS(algebraic_from_json(no_box), InvalidInput);
    // reducible minimal polynomial
    Json red{{"minpoly", Json::array({-1, 0, 0, 0, 1})},
             {"root", {{"re", Json::array({"1/1", "2/1"})},
                       {"im", Json::array({"0/1", "0/1"})}}}};
    CHECK_THROWS_AS(algebraic_from_json(red), InvalidInput);
    // box around the wrong number of roots
    Json wide{{"minpoly", Json::array({-1, -1, 1})},
              {"root", {{"re", Json::array({"-10/1", "10/1"})},
                        {"im", Json::array({"-1/1", "1/1"})}}}};
    CHECK_THROWS_AS(algebraic_from_json(wide), InvalidInput);
    CHECK_THROWS_AS(parse_rational("3/0"), DivisionByZero);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
}

TEST_CASE("power-sum specs") {
    PowerSumSpec spec = make_power_sum_spec({{rat(1, 2), phi()}, {rat(3), rat(2)}});
    Json j = spec_to_json(spec);
    PowerSumSpec back = spec_from_json(j);
    REQUIRE(back.terms.size() == 2);
    CHECK(alg_equals(back.terms[0].q, rat(1, 2)));
    CHECK(alg_equals(back.terms[0].alpha, phi()));
    CHECK(spec_to_json(back) == j);
    // bare array and {"alphas": ...} forms give unit coefficients
    PowerSumSpec bare = spec_from_json(Json::array({"2", "3"}));
    CHECK(bare.terms.size() == 2);
    CHECK(alg_equals(bare.terms[0].q, rat(1)));
    auto al = alphas_from_json(Json{{"alphas", Json::array({"2/1"})}});
    REQUIRE(al.size() == 1);
    CHECK(alg_equals(al[0], rat(2)));
}

TEST_CASE("budgets round-trip") {
    for (const auto& b : {SublinearBudget::power(Rational(2, 3), Rational(1, 2)),
                          SublinearBudget::log_shaved(Rational(5))}) {
        Json j = budget_to_json(b);
        SublinearBudget back = budget_from_json(j);
        CHECK(budget_to_json(back) == j);
    }
    CHECK_THROWS_AS(budget_from_json(Json{{"form", "what"}, {"c", "1/1"}}), InvalidInput);
}

TEST_CASE("certificates round-trip") {
    for (const auto& alphas :
         {std::vector<AlgebraicNumber>{phi()}, std::vector<AlgebraicNumber>{sqrt2()},
          std::vector<AlgebraicNumber>{rat(3, 2)},
          std::vector<AlgebraicNumber>{plastic()}}) {
        DecisionCertificate cert = decide_existence(alphas);
        Json j = certificate_to_json(cert);
        DecisionCertificate back = certificate_from_json(j);
        CHECK(certificate_to_json(back) == j);
        CHECK(back.exists == cert.exists);
        CHECK(back.exponent_m == cert.exponent_m);
        CHECK(back.theta0_is_zero == cert.theta0_is_zero);
        if (cert.theta0) CHECK(alg_equals(*back.theta0, *cert.theta0));
    }
}

TEST_CASE("decompositions round-trip") {
    RecurrenceSpec spec{{{{{Rational(1, 2)}}, phi()}}};
    Decomposition dec = decompose(spec, Rational(7, 10), 30, {64, 8, 1});
    Json j = decomposition_to_json(dec);
    Decomposition back = decomposition_from_json(j);
    CHECK(decomposition_to_json(back) == j);
    CHECK(back.threshold == dec.threshold);
    CHECK(back.exceptional == dec.exceptional);
    CHECK(back.progressions.size() == dec.progressions.size());
    CHECK(back.certified == dec.certified);
    CHECK(back.theta_tilde == dec.theta_tilde);
}

TEST_CASE("recurrences parse both coefficient forms") {
    Json j{{"terms",
            Json::array({Json{{"coeffs", Json::array({"1/2"})},
                              {"alpha", algebraic_to_json(phi())}},
                         Json{{"coeffs", Json::array({Json::array({"0/1", "1/3"})})},
                              {"alpha", "2"}}})}};
    RecurrenceSpec spec = recurrence_from_json(j);
    REQUIRE(spec.terms.size() == 2);
    CHECK(spec.terms[0].q_coeffs.size() == 1);
    CHECK(spec.terms[0].q_coeffs[0][0] == Rational(1, 2));
    CHECK(spec.terms[1].q_coeffs[0][1] == Rational(1, 3));
    Json back = recurrence_to_json(spec);
    RecurrenceSpec again = recurrence_from_json(back);
    CHECK(recurrence_to_json(again) == back);
}
