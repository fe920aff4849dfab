#include <doctest.h>

#include <stdexcept>

#include "dyckx/series.hpp"

using namespace dyckx;

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(Rational(3, 7)) == "3/7");
    CHECK(rational_to_string(Rational(-3, 7)) == "-3/7");
    CHECK(rational_from_string("3/7") == Rational(3, 7));
    CHECK(rational_from_string("-12") == Rational(-12));
    CHECK_THROWS_AS(rational_from_string("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
}

TEST_CASE("basic arithmetic is exact through the truncation order") {
    Series onePlus = Series::one(8) + Series::monomial(1, 1, 8);
    Series oneMinus = Series::one(8) - Series::monomial(1, 1, 8);
    Series product = onePlus * oneMinus;
    Series expected = Series::one(8) - Series::monomial(2, 1, 8);
    CHECK(product == expected);

    Series scaled = onePlus.scaled(Rational(3, 2));
    CHECK(scaled.coeff(0) == Rational(3, 2));
    CHECK(scaled.coeff(1) == Rational(3, 2));

    Series shifted = onePlus.shifted(3);
    CHECK(shifted.coeff(3) == 1);
    CHECK(shifted.coeff(4) == 1);
    CHECK(shifted.coeff(0) == 0);
}

TEST_CASE("monomial beyond the order is the zero series") {
    Series s = Series::monomial(9, 5, 4);
    CHECK(s.is_zero());
}

TEST_CASE("inverse and division") {
    Series oneMinus = Series::one(10) - Series::monomial(1, 1, 10);
    Series geometric = oneMinus.inverse();
    for (int k = 0; k <= 10; ++k) CHECK(geometric.coeff(k) == 1);
    CHECK((oneMinus * geometric) == Series::one(10));

    Series quotient = Series::one(10) / oneMinus;
    CHECK(quotient == geometric);

    Series noUnit(10);
    CHECK_THROWS_AS(noUnit.inverse(), std::domain_error);
}

TEST_CASE("sqrt squares back") {
    Series s = Series::one(12) + Series::monomial(1, Rational(1, 3), 12) +
               Series::monomial(4, -2, 12);
    Series r = s.sqrt();
    CHECK(r * r == s);
    Series bad = Series::constant(4, 12);
    CHECK_THROWS_AS(bad.sqrt(), std::domain_error);
}

TEST_CASE("log and exp are mutually inverse") {
    Series u = Series::monomial(1, 1, 10) + Series::monomial(3, Rational(-2, 5), 10);
    Series e = u.exp();
    CHECK(e.coeff(0) == 1);
    CHECK(e.log() == u);

    Series f = Series::one(10) + Series::monomial(2, 7, 10);
    CHECK(f.log().exp() == f);
}

TEST_CASE("exp_from_counts with unit counts gives the geometric series") {
    std::vector<Int> counts(11, Int(1));
    Series z = Series::exp_from_counts(counts, 10);
    for (int k = 0; k <= 10; ++k) CHECK(z.coeff(k) == 1);
}

TEST_CASE("evaluation is exact") {
    Series s = Series::one(4) + Series::monomial(2, 3, 4);
    CHECK(s.eval(Rational(1, 2)) == Rational(7, 4));
    CHECK(s.eval(Rational(0)) == 1);
}

TEST_CASE("agrees_with compares prefixes") {
    Series a = Series::one(10) + Series::monomial(5, 1, 10);
    Series b = Series::one(10);
    CHECK(a.agrees_with(b, 4));
    CHECK(!a.agrees_with(b, 5));
    CHECK(!a.agrees_with(b));
}

TEST_CASE("matrix determinant, inverse and arithmetic") {
    SeriesMatrix m(2, 8);
    m.at(0, 0) = Series::one(8);
    m.at(0, 1) = Series::monomial(1, 1, 8);
    m.at(1, 0) = Series::monomial(1, 1, 8);
    m.at(1, 1) = Series::one(8);
    Series det = m.det();
    CHECK(det == Series::one(8) - Series::monomial(2, 1, 8));

    SeriesMatrix inv = m.inverse();
    SeriesMatrix prod = m * inv;
    CHECK(prod.at(0, 0) == Series::one(8));
    CHECK(prod.at(0, 1).is_zero());
    CHECK(prod.at(1, 0).is_zero());
    CHECK(prod.at(1, 1) == Series::one(8));

    SeriesMatrix fromInt = SeriesMatrix::from_int({{1, 2}, {3, 4}}, 8);
    CHECK(fromInt.det() == Series::constant(-2, 8));

    SeriesMatrix sum = fromInt + fromInt;
    CHECK(sum.at(1, 0) == Series::constant(6, 8));
    SeriesMatrix diff = sum - fromInt;
    CHECK(diff.at(1, 1) == Series::constant(4, 8));
}

TEST_CASE("matrix inverse requires an invertible constant term") {
    SeriesMatrix m(2, 4);
    m.at(0, 0) = Series::monomial(1, 1, 4);
    m.at(1, 1) = Series::one(4);
    CHECK_THROWS_AS(m.inverse(), std::domain_error);
}

TEST_CASE("series string form") {
    Series s = Series::one(4) + Series::monomial(1, 2, 4) + Series::monomial(2, 8, 4);
    CHECK(s.str() == "1 + 2*z + 8*z^2");
    CHECK(Series(4).str() == "0");
}
