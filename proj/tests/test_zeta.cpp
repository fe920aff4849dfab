#include <doctest.h>

#include <string>

#include "dyckx/kernel.hpp"
#include "dyckx/zeta.hpp"

using namespace dyckx;

namespace {

SubshiftSpec uneven_spec() {
    return SubshiftSpec::from_matrices(
        {2, 1}, {{2, 1}, {1, 1}}, {{1, 1}, {2, 0}}, {{2, 0}, {1, 1}});
}

bool parts_match_oracle(const ZetaParts& parts, const ZetaParts& oracle, int through) {
    return parts.total.agrees_with(oracle.total, through) &&
           parts.neutral.agrees_with(oracle.neutral, through) &&
           parts.nonPositive.agrees_with(oracle.nonPositive, through) &&
           parts.nonNegative.agrees_with(oracle.nonNegative, through);
}

}  // namespace

TEST_CASE("full two-class shift periodic point counts") {
    SubshiftSpec d2 = SubshiftSpec::full_dyck(2);
    PeriodicCensus census = periodic_census(d2, 6);
    const long long totals[] = {4, 12, 40, 120, 384, 1152};
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(census.total[n] == totals[n - 1]);
        // Neutral points are counted in both one-sided rows.
        CHECK(census.nonPositive[n] + census.nonNegative[n] - census.neutral[n] ==
              census.total[n]);
    }
    CHECK(census.nonPositive[1] == 2);
    CHECK(census.nonNegative[1] == 2);
    CHECK(census.neutral[1] == 0);
    CHECK(census.nonPositive[2] == 8);
    CHECK(census.nonNegative[2] == 8);
    CHECK(census.neutral[2] == 4);
}

TEST_CASE("determinant formulas match the census oracle") {
    for (const SubshiftSpec& spec : {SubshiftSpec::full_dyck(2), uneven_spec()}) {
        ZetaParts parts = zeta_parts(spec, 10);
        ZetaParts oracle = oracle_parts(periodic_census(spec, 10));
        CHECK(parts_match_oracle(parts, oracle, 10));
        CHECK(parts.total.agrees_with(zeta_oracle(spec, 10), 10));
        // Neutral points belong to both one-sided factors.
        CHECK((parts.total * parts.neutral).agrees_with(
            parts.nonPositive * parts.nonNegative, 10));
    }
}

TEST_CASE("matrix order in the one-sided factors is not arbitrary") {
    SubshiftSpec spec = uneven_spec();
    ZetaParts derived = zeta_parts(spec, 10);
    ZetaVariant flipped;
    flipped.minusFactorGA = false;
    flipped.plusFactorAG = false;
    ZetaParts alt = zeta_parts(spec, 10, flipped);
    ZetaParts oracle = oracle_parts(periodic_census(spec, 10));
    CHECK(parts_match_oracle(derived, oracle, 10));
    CHECK_FALSE(alt.nonPositive.agrees_with(oracle.nonPositive, 10));
    CHECK_FALSE(alt.nonNegative.agrees_with(oracle.nonNegative, 10));
}

TEST_CASE("markov zeta of a one-vertex code") {
    // Single code word of length 2: zeta = 1/(1 - z^2).
    SeriesMatrix H(1, 8);
    H.at(0, 0) = Series::monomial(2, Rational(1), 8);
    Series zeta = markov_zeta(H);
    for (int k = 0; k <= 8; k += 2) CHECK(zeta.coeff(k) == 1);
    CHECK(zeta.coeff(3) == 0);
}

TEST_CASE("census search honors its node budget") {
    SubshiftSpec d2 = SubshiftSpec::full_dyck(2);
    CHECK_THROWS_WITH_AS(periodic_census(d2, 10, 5),
                         "periodic_census: node budget exceeded", BudgetExceeded);
}
