#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dyckx/series.hpp"

namespace dyckx {

using Float = boost::multiprecision::cpp_bin_float_50;

// Small exact 2x2 integer matrix used by the diagonal-identity and
// classification machinery.  Entries may be negative (ring-level checks);
// conversion to a SubshiftSpec is what enforces nonnegativity.
struct Mat2 {
    std::array<std::array<long long, 2>, 2> e{};

    static Mat2 identity() { return Mat2{{{{1, 0}, {0, 1}}}}; }
    static Mat2 zero() { return Mat2{}; }

    long long at(int i, int j) const { return e[i][j]; }
    long long& at(int i, int j) { return e[i][j]; }

    Mat2 operator*(const Mat2& o) const;
    Mat2 transpose() const;
    long long trace() const { return e[0][0] + e[1][1]; }
    long long det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

    auto operator<=>(const Mat2&) const = default;
};

std::string mat2_to_string(const Mat2& m);

// An ordered triple (Aminus, A, Aplus) of 2x2 matrices.  The defaulted
// ordering is what orbit representatives are keyed by.
struct Triplet {
    Mat2 Aminus;
    Mat2 A;
    Mat2 Aplus;

    auto operator<=>(const Triplet&) const = default;
};

std::string triplet_to_string(const Triplet& t);

// Diagonal entries of Aminus * A^k * Aplus, computed exactly.
std::pair<Int, Int> diag_power_entries(const Triplet& t, int k);

// (first, second) diagonal conditions: equality of the two diagonal entries
// of Aminus*Aplus and of Aminus*A*Aplus.
std::pair<bool, bool> diag_conditions(const Triplet& t);

struct PowerDiagonalReport {
    bool applicable = false;   // both diagonal conditions hold
    bool holds = false;        // diagonal equality for every k in [0, kMax]
    int firstFailureK = -1;    // -1 when no failure
    int kMax = 0;
};

// Checks that the two base diagonal conditions propagate to every power
// Aminus * A^k * Aplus with 0 <= k <= kMax.
PowerDiagonalReport power_diagonal_check(const Triplet& t, int kMax = 12);

// Structured matrix families that force the diagonal conditions, plus the
// two near-miss variants kept for counterexample reporting.
enum class FamilyForm {
    Circulant,                 // all three matrices circulant
    RowColumnConstant,         // Aminus has equal rows, Aplus equal columns
    SwapTranspose,             // A symmetric, Aplus a fixed rearrangement of Aminus
    NearCirculant,             // Aplus rows repeated instead (does not hold)
    NearRowColumnConstant,     // Aplus circulant instead (does not hold)
};

const char* family_form_name(FamilyForm form);

bool matches_family(FamilyForm form, const Triplet& t);

struct FamilyTags {
    bool circulant = false;
    bool rowColumnConstant = false;
    bool swapTranspose = false;
};

FamilyTags family_of(const Triplet& t);

struct FamilyValidationReport {
    FamilyForm form{};
    bool expectedToHold = false;
    int trials = 0;
    int kMax = 0;
    unsigned long seed = 0;
    int failures = 0;               // draws/instances violating the identity
    bool counterexampleFound = false;
    Triplet counterexample{};
    int counterexampleFirstK = -1;
    long long counterexampleLhs = 0;
    long long counterexampleRhs = 0;
    bool ok = false;                // validated as expected for this form
    std::string note;
};

// For the three sound families: random instances (entries 0..3) must satisfy
// the diagonal identity for every k <= kMax.  For the two near-miss
// variants: a fixed small counterexample is verified and reported.
FamilyValidationReport validate_family_form(FamilyForm form, int trials = 200,
                                            int kMax = 12,
                                            unsigned long seed = 12345);

// Solves the two-class excursion system in its explicit coupled scalar form
// (shared rational denominator, four transfer terms per class).  This is an
// independent route from solve_genfun's matrix-inverse formulation and must
// agree with it.
std::array<Series, 2> solve_coupled_g(const Triplet& t, int M, int order = 24);

// Coefficient data of the cubic satisfied by the common excursion series g
// when the diagonal conditions hold:
//   detA * g^3 + B * g^2 + C * g + D = 0,
// with resolvent combinations discI = B^2 - 3*C*detA and
// discJ = 9*B*C*detA - 27*D*detA^2 - 2*B^3.
struct CubicData {
    long long trA = 0;
    long long detA = 0;
    long long eta4 = 0;  // (Aminus*Aplus) diagonal value
    long long eta6 = 0;  // (Aminus*A*Aplus) diagonal value
    int M = 0;
    Series B;
    Series C;
    Series D;
    Series discI;
    Series discJ;

    CubicData() : B(0), C(0), D(0), discI(0), discJ(0) {}
};

CubicData make_cubic_data(const Triplet& t, int M, int order = 24);

struct CubicReport {
    bool diag4 = false;          // first diagonal condition
    bool diag6 = false;          // second diagonal condition
    bool gEqual46 = false;       // g0 and g1 agree at z^4 and z^6
    bool equivalenceOk = false;  // (diag4 && diag6) == gEqual46
    bool proofIdentitiesOk = false;  // low-order structural coefficient identities
    bool coupledMatches = false;     // coupled-form route equals matrix route
    bool gEqualFull = false;         // g0 == g1 through the working order
    bool cubicResidualZero = false;  // cubic residual vanishes through the order
    Series g0{0};
    Series g1{0};
    CubicData data;
};

// Full check of the two-class criterion: the two diagonal conditions are
// equivalent to agreement of the class excursion series at orders 4 and 6,
// and when they hold the common series satisfies the cubic above.
CubicReport cubic_criterion_check(const Triplet& t, int M = 1, int order = 24);

struct ClosedFormReport {
    bool ok = false;             // shipped route produced a value
    Float value{0};              // closed-form value (shipped routing)
    Float seriesValue{0};        // truncated series evaluated at z0
    Float absDiff{0};
    std::string route;           // which branch was used and why
    bool variantOk = false;        // fixed-branch variant produced a value
    Float variantValue{0};
    Float variantAbsDiff{0};
    std::string variantRoute;      // the variant's branch and any failure note
};

// Evaluates the closed-form solution of the cubic at a rational point z0 and
// compares it against the truncated series g.  Routing is by the exact sign
// of discJ^2 - 4*discI^3 at z0: positive gives the real-cube-root form,
// nonpositive the trigonometric form (root of minimal modulus, matching
// g(0) = 0); detA = 0 degenerates to a quadratic/linear branch.  A second
// value computed with the fixed-branch routing (selection by the
// characteristic roots of A, cosine branch fixed at 2*pi/3 offset) is
// reported alongside; when that routing is inapplicable the failure is
// reported rather than clamped.
ClosedFormReport closed_form_eval(const CubicData& data, const Rational& z0,
                                  const Series& g);

}  // namespace dyckx
