#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dyckx/kernel.hpp"

using namespace dyckx;

TEST_CASE("symbol strings round trip") {
    CHECK(symbol_to_string(opener(0, 1)) == "-0.1");
    CHECK(symbol_to_string(closer(1, 2)) == "+1.2");
    CHECK(symbol_from_string("-0.1") == opener(0, 1));
    CHECK(symbol_from_string("+1.2") == closer(1, 2));
    CHECK_THROWS_AS(symbol_from_string("0.1"), std::invalid_argument);
    CHECK_THROWS_AS(symbol_from_string("-x.1"), std::invalid_argument);
}

TEST_CASE("reduction matches same-class pairs and zeroes mismatches") {
    CHECK(reduce({opener(0), closer(0)}).is_identity());
    CHECK(reduce({opener(0, 1), closer(0, 2)}).is_identity());  // copies may differ
    CHECK(reduce({opener(0), closer(1)}).zero);
    CHECK(reduce({opener(0), opener(1), closer(1), closer(0)}).is_identity());
    CHECK(reduce({opener(0), opener(1), closer(0)}).zero);

    // Normal form: unmatched closers in appearance order, then unmatched openers.
    ReducedElement r = reduce({closer(1), closer(0), opener(0), opener(1)});
    CHECK(!r.zero);
    CHECK(r.unmatchedPlus == Word{closer(1), closer(0)});
    CHECK(r.unmatchedMinus == Word{opener(0), opener(1)});

    // A closer first matches the most recent opener.
    ReducedElement s = reduce({closer(0), opener(1), opener(0), closer(0)});
    CHECK(s.unmatchedPlus == Word{closer(0)});
    CHECK(s.unmatchedMinus == Word{opener(1)});
}

TEST_CASE("reduce_concat multiplies normal forms") {
    ReducedElement a = reduce({opener(0)});
    ReducedElement b = reduce({closer(0)});
    CHECK(reduce_concat(a, b).is_identity());
    ReducedElement c = reduce({closer(1)});
    CHECK(reduce_concat(a, c).zero);
    CHECK(reduce_concat(ReducedElement::make_zero(), a).zero);
}

TEST_CASE("multiplier classes") {
    CHECK(multiplier_class({opener(0), closer(0)}) == MultiplierClass::Neutral);
    CHECK(multiplier_class({opener(0)}) == MultiplierClass::NonPositive);
    CHECK(multiplier_class({closer(0)}) == MultiplierClass::NonNegative);
    CHECK(multiplier_class({opener(0), closer(1)}) == MultiplierClass::Zero);
    CHECK(multiplier_class({closer(0), opener(0)}) == MultiplierClass::Mixed);
    CHECK(multiplier_class_name(MultiplierClass::NonPositive) == "NonPositive");
}

TEST_CASE("full shift construction and alphabet order") {
    SubshiftSpec d2 = SubshiftSpec::full_dyck(2);
    CHECK(d2.N == 2);
    auto alphabet = d2.alphabet();
    REQUIRE(alphabet.size() == 4);
    CHECK(alphabet[0] == opener(0));
    CHECK(alphabet[1] == opener(1));
    CHECK(alphabet[2] == closer(0));
    CHECK(alphabet[3] == closer(1));
    CHECK(std::is_sorted(alphabet.begin(), alphabet.end()));
}

TEST_CASE("validation names the violated restriction") {
    SubshiftSpec bad = SubshiftSpec::full_dyck(2);
    bad.Aminus[0][1] = 3;
    bad.M = {1, 2};
    CHECK_THROWS_WITH_AS(bad.validate(),
                         "Aminus(0,1) = 3 violates 0 <= entry <= M[1] = 2",
                         std::invalid_argument);

    SubshiftSpec wrongM = SubshiftSpec::full_dyck(2);
    wrongM.M = {1};
    CHECK_THROWS_AS(wrongM.validate(), std::invalid_argument);
}

TEST_CASE("pair_allowed reads the count matrices; opener-closer is free") {
    SubshiftSpec spec = SubshiftSpec::from_matrices(
        {2, 1}, {{1, 0}, {2, 1}}, {{2, 1}, {0, 1}}, {{1, 1}, {2, 0}});
    // opener-opener via Aminus
    CHECK(spec.pair_allowed(opener(0, 1), opener(0, 1)));
    CHECK(!spec.pair_allowed(opener(0, 1), opener(0, 2)));  // Aminus(0,0) = 1
    CHECK(!spec.pair_allowed(opener(0, 1), opener(1, 1)));  // Aminus(0,1) = 0
    CHECK(spec.pair_allowed(opener(1, 1), opener(0, 2)));   // Aminus(1,0) = 2
    // closer-opener via A
    CHECK(spec.pair_allowed(closer(0, 1), opener(0, 2)));   // A(0,0) = 2
    CHECK(!spec.pair_allowed(closer(1, 1), opener(0, 1)));  // A(1,0) = 0
    // closer-closer via Aplus
    CHECK(spec.pair_allowed(closer(1, 1), opener(1, 1)));
    CHECK(!spec.pair_allowed(closer(1, 1), closer(1, 1)));  // Aplus(1,1) = 0
    CHECK(spec.pair_allowed(closer(1, 1), closer(0, 2)));   // Aplus(1,0) = 2
    // opener-closer pairs carry no constraint, even across classes
    CHECK(spec.pair_allowed(opener(0, 1), closer(1, 1)));
    CHECK(spec.pair_allowed(opener(1, 1), closer(1, 1)));
}

TEST_CASE("explicit subsets override the initial intervals") {
    SubshiftSpec spec = SubshiftSpec::from_matrices({2, 2}, {{1, 1}, {1, 1}},
                                                    {{1, 1}, {1, 1}},
                                                    {{1, 1}, {1, 1}});
    SubsetFamily fam;
    fam.minus = {{{2}, {1}}, {{1}, {2}}};
    fam.mid = {{{1}, {1}}, {{1}, {1}}};
    fam.plus = {{{1}, {2}}, {{2}, {1}}};
    spec.subsets = fam;
    spec.validate();
    CHECK(spec.pair_allowed(opener(0, 1), opener(0, 2)));   // minus[0][0] = {2}
    CHECK(!spec.pair_allowed(opener(0, 1), opener(0, 1)));
    CHECK(spec.pair_allowed(closer(0, 2), closer(1, 2)));   // plus[0][1] = {2}
    CHECK(!spec.pair_allowed(closer(0, 2), closer(1, 1)));

    SubshiftSpec wrongCardinality = spec;
    wrongCardinality.subsets->minus[0][0] = {1, 2};
    CHECK_THROWS_AS(wrongCardinality.validate(), std::invalid_argument);

    SubshiftSpec notIncreasing = spec;
    notIncreasing.subsets->plus[0][1] = {2, 2};
    notIncreasing.Aplus[0][1] = 2;
    CHECK_THROWS_AS(notIncreasing.validate(), std::invalid_argument);
}

TEST_CASE("local admissibility needs allowed pairs and a nonzero product") {
    SubshiftSpec d2 = SubshiftSpec::full_dyck(2);
    CHECK(is_locally_admissible(d2, {opener(0), opener(1), closer(1), closer(0)}));
    CHECK(is_locally_admissible(d2, {closer(0), closer(1), opener(0)}));
    // Nonadjacent mismatch via reduction:
    CHECK(!is_locally_admissible(d2, {opener(0), opener(1), closer(1), closer(1)}));
    // Adjacent mismatch:
    CHECK(!is_locally_admissible(d2, {opener(0), closer(1)}));

    SubshiftSpec noMinusPairs = SubshiftSpec::from_matrices(
        {1, 1}, {{0, 0}, {0, 0}}, {{1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
    CHECK(!is_locally_admissible(noMinusPairs, {opener(0), opener(1)}));
    CHECK(is_locally_admissible(noMinusPairs, {opener(0), closer(0)}));
}

TEST_CASE("periodic words classified by their one-sided rotations") {
    SubshiftSpec d2 = SubshiftSpec::full_dyck(2);
    auto [okNeutral, clsNeutral] = is_periodic_word(d2, {opener(0), closer(0)});
    CHECK(okNeutral);
    CHECK(clsNeutral == MultiplierClass::Neutral);

    auto [okOpen, clsOpen] = is_periodic_word(d2, {opener(0)});
    CHECK(okOpen);
    CHECK(clsOpen == MultiplierClass::NonPositive);

    auto [okClose, clsClose] = is_periodic_word(d2, {closer(1), closer(0)});
    CHECK(okClose);
    CHECK(clsClose == MultiplierClass::NonNegative);

    // (-0 +1) has admissible cyclic pairs? No: the pair itself is a mismatch.
    auto [okMismatch, clsMismatch] = is_periodic_word(d2, {opener(0), closer(1)});
    CHECK(!okMismatch);
    CHECK(clsMismatch == MultiplierClass::Zero);

    // Openers and closers balanced but never reducible to one side:
    auto [okMixed, clsMixed] =
        is_periodic_word(d2, {closer(0), opener(1), opener(0), closer(0)});
    CHECK(!okMixed);
    CHECK(clsMixed == MultiplierClass::Zero);

    // Excess openers from a mixed window still admit a one-sided rotation.
    auto [okExcess, clsExcess] =
        is_periodic_word(d2, {opener(0), opener(1), closer(1)});
    CHECK(okExcess);
    CHECK(clsExcess == MultiplierClass::NonPositive);
}

TEST_CASE("canonicalize rewrites subsets as intervals with a relabeling") {
    SubshiftSpec spec = SubshiftSpec::from_matrices({2, 2}, {{1, 1}, {1, 1}},
                                                    {{1, 1}, {1, 1}},
                                                    {{1, 1}, {1, 1}});
    SubsetFamily fam;
    fam.minus = {{{2}, {1}}, {{1}, {2}}};
    fam.mid = {{{1}, {2}}, {{2}, {1}}};
    fam.plus = {{{1}, {2}}, {{2}, {1}}};
    spec.subsets = fam;
    spec.validate();

    auto [canonical, map] = canonicalize(spec);
    CHECK(!canonical.subsets.has_value());
    CHECK(canonical.Aminus == spec.Aminus);
    CHECK(canonical.A == spec.A);
    CHECK(canonical.Aplus == spec.Aplus);
    CHECK(map.source == spec);
    CHECK(map.target == canonical);

    // The image of an admissible word is admissible for the target.
    Word w{opener(0, 1), opener(0, 2), closer(0, 1), closer(0, 1)};
    REQUIRE(is_locally_admissible(spec, w));
    Word image = relabel_word(w, map);
    CHECK(is_locally_admissible(canonical, image));
    CHECK(image.size() == w.size());
    CHECK(image[0] == w[0]);  // first symbol fixed

    // Round trip through the inverse map.
    RelabelMap inverse = map.inverted();
    CHECK(relabel_word(image, inverse) == w);

    CHECK_THROWS_AS(relabel_word({opener(0, 1), opener(0, 1)}, map),
                    std::invalid_argument);
}

TEST_CASE("interval specs canonicalize to themselves") {
    SubshiftSpec d2 = SubshiftSpec::full_dyck(2);
    auto [canonical, map] = canonicalize(d2);
    CHECK(canonical == d2);
    Word w{opener(0), opener(1), closer(1)};
    CHECK(relabel_word(w, map) == w);
    CHECK(relabel_word_cyclic(w, map) == w);
}

TEST_CASE("diagnostics flags dead symbols") {
    SubshiftSpec healthy = SubshiftSpec::full_dyck(2);
    CHECK(diagnostics(healthy).empty());

    // The class-1 closer has no admissible successor: row 1 of both A and
    // Aplus is zero, so nothing may follow it.
    SubshiftSpec spec = SubshiftSpec::from_matrices(
        {1, 1}, {{1, 0}, {0, 0}}, {{1, 0}, {0, 0}}, {{1, 0}, {0, 0}});
    DiagnosticsReport report = diagnostics(spec);
    CHECK(!report.empty());
}

TEST_CASE("words render as space-separated symbols") {
    CHECK(word_to_string({opener(0), closer(1, 2)}) == "-0.1 +1.2");
}
