#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "psl/trajectory.hpp"
#include "psl/errors.hpp"
#include "tests/test_util.hpp"

using namespace psl;
using namespace psl::testutil;

namespace {

PowerSumSpec ones(std::vector<AlgebraicNumber> alphas) {
    std::vector<PowerSumTerm> terms;
    for (auto& a : alphas) terms.push_back({rat(1), std::move(a)});
    return make_power_sum_spec(std::move(terms));
}

Int lucas(unsigned long n) {
    Int a(2), b(1);
    for (unsigned long i = 0; i < n; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return a;
}

}  // namespace

TEST_CASE("catalog distances") {
    DistanceSample s = eval_distance(ones({phi()}), 10, {128, 8, 1});
    CHECK(s.decided);
    CHECK(s.closest_integer == 123);  // Lucas(10)
    CHECK(std::abs(s.distance.midpoint().to_double() - 0.0081306188) < 1e-9);

    DistanceSample t = eval_distance(ones({rat(3, 2)}), 4, {64, 8, 1});
    CHECK(t.decided);
    CHECK(t.closest_integer == 5);
    REQUIRE(t.exact_distance.has_value());
    CHECK(*t.exact_distance == Rational(1, 16));  // 81/16 = 5.0625

    // the paper's tie rule: 5/2 rounds to the smaller integer
    DistanceSample tie = eval_distance(ones({rat(5, 2)}), 1, {64, 8, 1});
    CHECK(tie.closest_integer == 2);
    CHECK(*tie.exact_distance == Rational(1, 2));

    CHECK_THROWS_AS(eval_distance(ones({phi()}), 0, {}), InvalidInput);
}

TEST_CASE("exact rational path is bit-for-bit") {
    PowerSumSpec spec = make_power_sum_spec({{rat(1, 2), rat(3, 2)}, {rat(2), rat(2)}});
    for (unsigned long n = 1; n <= 64; ++n) {
        DistanceSample s = eval_distance(spec, n, {64, 8, 1});
        REQUIRE(s.exact_distance.has_value());
        Rational v = Rational(1, 2) * rational_pow(Rational(3, 2), n) +
                     Rational(2) * rational_pow(Rational(2), n);
        Int p = round_to_nearest_tie_smaller(v);
        CHECK(s.closest_integer == p);
        CHECK(*s.exact_distance == abs(v - Rational(p)));
    }
}

TEST_CASE("conjugate-sum identity against the Lucas oracle") {
    PowerSumSpec spec = ones({phi()});
    mpfr_prec_t prec = 256;
    // |psi|^n via interval arithmetic from the box
    RealInterval psi_abs = abs_enclosure(psi_conj(), prec);
    for (unsigned long n = 1; n <= 60; ++n) {
        DistanceSample s = eval_distance(spec, n, {256, 8, 1});
        CHECK(s.decided);
        CHECK(s.closest_integer == lucas(n));
        RealInterval oracle = psi_abs.pow_ui(n);
        // enclosures of the same value must overlap
        CHECK(s.distance.lo().cmp(oracle.hi()) <= 0);
        CHECK(oracle.lo().cmp(s.distance.hi()) <= 0);
    }
}

TEST_CASE("precision escalation is monotone and verdicts are stable") {
    PowerSumSpec spec = ones({plastic()});
    DistanceSample coarse = eval_distance(spec, 17, {64, 8, 1});
    DistanceSample fine = eval_distance(spec, 17, {128, 8, 1});
    CHECK(coarse.decided);
    CHECK(fine.decided);
    CHECK(fine.distance.width().cmp(coarse.distance.width()) <= 0);
    CHECK(fine.closest_integer == coarse.closest_integer);

    auto r1 = scan(spec, 1, 30, Rational(9, 10), {64, 8, 1});
    auto r2 = scan(spec, 1, 30, Rational(9, 10), {256, 8, 1});
    for (size_t i = 0; i < r1.rows.size(); ++i) {
        if (r1.rows[i].in_member_set && r2.rows[i].in_member_set)
            CHECK(*r1.rows[i].in_member_set == *r2.rows[i].in_member_set);
    }
}

TEST_CASE("scans") {
    // phi: every n is a member at theta = 0.7
    auto rep = scan(ones({phi()}), 1, 20, Rational(7, 10), {128, 8, 2});
    for (const auto& row : rep.rows) {
        REQUIRE(row.in_member_set.has_value());
        CHECK(*row.in_member_set);
    }
    // 3/2: no members at theta = 0.6 on [5, 60]
    auto rep2 = scan(ones({rat(3, 2)}), 5, 60, Rational(3, 5), {64, 8, 2});
    for (const auto& row : rep2.rows) {
        REQUIRE(row.in_member_set.has_value());
        CHECK_FALSE(*row.in_member_set);
    }
    // (1/2) phi^n at theta = 0.7: membership is exactly {1, 2, 3, 6, 9, 12}
    PowerSumSpec half_phi = make_power_sum_spec({{rat(1, 2), phi()}});
    auto rep3 = scan(half_phi, 1, 12, Rational(7, 10), {128, 8, 2});
    std::vector<unsigned long> members;
    for (const auto& row : rep3.rows) {
        REQUIRE(row.in_member_set.has_value());
        if (*row.in_member_set) members.push_back(row.sample.n);
    }
    CHECK(members == std::vector<unsigned long>{1, 2, 3, 6, 9, 12});

    CHECK_THROWS_AS(scan(ones({phi()}), 3, 2, std::nullopt, {}), InvalidInput);
    CHECK_THROWS_AS(scan(ones({phi()}), 1, 2, Rational(2), {}), InvalidInput);
}

TEST_CASE("threaded scans merge deterministically") {
    PowerSumSpec spec = ones({plastic()});
    auto seq = scan(spec, 1, 24, Rational(9, 10), {64, 8, 1});
    auto par = scan(spec, 1, 24, Rational(9, 10), {64, 8, 4});
    REQUIRE(seq.rows.size() == par.rows.size());
    for (size_t i = 0; i < seq.rows.size(); ++i) {
        CHECK(seq.rows[i].sample.closest_integer == par.rows[i].sample.closest_integer);
        CHECK(seq.rows[i].sample.decided == par.rows[i].sample.decided);
        REQUIRE(seq.rows[i].in_member_set.has_value() ==
                par.rows[i].in_member_set.has_value());
        if (seq.rows[i].in_member_set)
            CHECK(*seq.rows[i].in_member_set == *par.rows[i].in_member_set);
    }
}

TEST_CASE("csv export shape") {
    auto rep = scan(ones({phi()}), 1, 5, Rational(7, 10), {64, 8, 1});
    std::ostringstream os;
    write_csv(rep, os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "n,p,dist_lo,dist_hi,decided,theta_power,in_M");
    size_t rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        size_t commas = 0;
        for (char c : line) commas += c == ',';
        CHECK(commas == 6);
    }
    CHECK(rows == 5);
    // identical scans produce identical bytes
    std::ostringstream os2;
    write_csv(scan(ones({phi()}), 1, 5, Rational(7, 10), {64, 8, 1}), os2);
    CHECK(os.str() == os2.str());
}

TEST_CASE("waring table") {
    auto rows = waring_check(4);
    REQUIRE(rows.size() == 4);
    CHECK(rows[1].k == 2);
    CHECK(rows[1].g == 4);
    CHECK(rows[2].g == 9);
    CHECK(rows[3].g == 19);
    CHECK(rows[3].floor_term == 5);
    CHECK(rows[3].distance == Rational(1, 16));
    CHECK_THROWS_AS(waring_check(0), InvalidInput);
    CHECK_THROWS_AS(waring_check(65), InvalidInput);
}
