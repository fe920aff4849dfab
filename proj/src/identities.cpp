#include "dyckx/identities.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "dyckx/genfun.hpp"

namespace dyckx {

namespace {

using IntMat = std::array<std::array<Int, 2>, 2>;

IntMat to_int_mat(const Mat2& m) {
    return IntMat{{{Int(m.at(0, 0)), Int(m.at(0, 1))},
                   {Int(m.at(1, 0)), Int(m.at(1, 1))}}};
}

IntMat mul(const IntMat& x, const IntMat& y) {
    IntMat r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

// First k in [0, kMax] where the diagonal entries of Aminus*A^k*Aplus
// differ, or -1 when they agree everywhere.
int first_diag_failure(const Triplet& t, int kMax) {
    IntMat am = to_int_mat(t.Aminus);
    IntMat a = to_int_mat(t.A);
    IntMat ap = to_int_mat(t.Aplus);
    IntMat power{{{Int(1), Int(0)}, {Int(0), Int(1)}}};
    for (int k = 0; k <= kMax; ++k) {
        IntMat full = mul(mul(am, power), ap);
        if (full[0][0] != full[1][1]) return k;
        power = mul(power, a);
    }
    return -1;
}

std::vector<std::vector<long long>> to_rows(const Mat2& m) {
    return {{m.at(0, 0), m.at(0, 1)}, {m.at(1, 0), m.at(1, 1)}};
}

Float to_float(const Rational& r) {
    return static_cast<Float>(boost::multiprecision::numerator(r)) /
           static_cast<Float>(boost::multiprecision::denominator(r));
}

Float signed_cbrt(const Float& x) {
    if (x == 0) return Float(0);
    Float magnitude = pow(abs(x), Float(1) / 3);
    return x < 0 ? Float(-magnitude) : magnitude;
}

}  // namespace

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.e[i][j] = e[i][0] * o.e[0][j] + e[i][1] * o.e[1][j];
    return r;
}

Mat2 Mat2::transpose() const {
    return Mat2{{{{e[0][0], e[1][0]}, {e[0][1], e[1][1]}}}};
}

std::string mat2_to_string(const Mat2& m) {
    std::ostringstream out;
    out << "[[" << m.at(0, 0) << "," << m.at(0, 1) << "],[" << m.at(1, 0)
        << "," << m.at(1, 1) << "]]";
    return out.str();
}

std::string triplet_to_string(const Triplet& t) {
    return "(" + mat2_to_string(t.Aminus) + ", " + mat2_to_string(t.A) + ", " +
           mat2_to_string(t.Aplus) + ")";
}

std::pair<Int, Int> diag_power_entries(const Triplet& t, int k) {
    if (k < 0) throw std::invalid_argument("power index must be nonnegative");
    IntMat power{{{Int(1), Int(0)}, {Int(0), Int(1)}}};
    IntMat a = to_int_mat(t.A);
    for (int i = 0; i < k; ++i) power = mul(power, a);
    IntMat full = mul(mul(to_int_mat(t.Aminus), power), to_int_mat(t.Aplus));
    return {full[0][0], full[1][1]};
}

std::pair<bool, bool> diag_conditions(const Triplet& t) {
    auto [l0, r0] = diag_power_entries(t, 0);
    auto [l1, r1] = diag_power_entries(t, 1);
    return {l0 == r0, l1 == r1};
}

PowerDiagonalReport power_diagonal_check(const Triplet& t, int kMax) {
    if (kMax < 1) throw std::invalid_argument("kMax must be at least 1");
    PowerDiagonalReport rep;
    rep.kMax = kMax;
    auto [c4, c6] = diag_conditions(t);
    rep.applicable = c4 && c6;
    rep.firstFailureK = first_diag_failure(t, kMax);
    rep.holds = rep.firstFailureK < 0;
    return rep;
}

const char* family_form_name(FamilyForm form) {
    switch (form) {
        case FamilyForm::Circulant: return "circulant";
        case FamilyForm::RowColumnConstant: return "row-column-constant";
        case FamilyForm::SwapTranspose: return "swap-transpose";
        case FamilyForm::NearCirculant: return "near-circulant";
        case FamilyForm::NearRowColumnConstant:
            return "near-row-column-constant";
    }
    return "unknown";
}

namespace {

bool is_circulant(const Mat2& m) {
    return m.at(0, 0) == m.at(1, 1) && m.at(0, 1) == m.at(1, 0);
}

bool has_equal_rows(const Mat2& m) {
    return m.at(0, 0) == m.at(1, 0) && m.at(0, 1) == m.at(1, 1);
}

bool has_equal_columns(const Mat2& m) {
    return m.at(0, 0) == m.at(0, 1) && m.at(1, 0) == m.at(1, 1);
}

bool is_symmetric(const Mat2& m) { return m.at(0, 1) == m.at(1, 0); }

// Aplus is the fixed rearrangement [[b2,b0],[b3,b1]] of Aminus=[[b0,b1],[b2,b3]].
bool is_swap_rearrangement(const Mat2& am, const Mat2& ap) {
    return ap.at(0, 0) == am.at(1, 0) && ap.at(0, 1) == am.at(0, 0) &&
           ap.at(1, 0) == am.at(1, 1) && ap.at(1, 1) == am.at(0, 1);
}

}  // namespace

bool matches_family(FamilyForm form, const Triplet& t) {
    switch (form) {
        case FamilyForm::Circulant:
            return is_circulant(t.Aminus) && is_circulant(t.A) &&
                   is_circulant(t.Aplus);
        case FamilyForm::RowColumnConstant:
            return has_equal_rows(t.Aminus) && has_equal_columns(t.Aplus);
        case FamilyForm::SwapTranspose:
            return is_symmetric(t.A) && is_swap_rearrangement(t.Aminus, t.Aplus);
        case FamilyForm::NearCirculant:
            return is_circulant(t.Aminus) && is_circulant(t.A) &&
                   has_equal_rows(t.Aplus);
        case FamilyForm::NearRowColumnConstant:
            return has_equal_rows(t.Aminus) && is_circulant(t.Aplus);
    }
    return false;
}

FamilyTags family_of(const Triplet& t) {
    FamilyTags tags;
    tags.circulant = matches_family(FamilyForm::Circulant, t);
    tags.rowColumnConstant = matches_family(FamilyForm::RowColumnConstant, t);
    tags.swapTranspose = matches_family(FamilyForm::SwapTranspose, t);
    return tags;
}

namespace {

Triplet draw_family_instance(FamilyForm form, std::mt19937& rng) {
    std::uniform_int_distribution<long long> dist(0, 3);
    auto pick = [&]() { return dist(rng); };
    Triplet t;
    switch (form) {
        case FamilyForm::Circulant: {
            long long a = pick(), b = pick(), c = pick(), d = pick(),
                      e = pick(), f = pick();
            t.Aminus = Mat2{{{{a, b}, {b, a}}}};
            t.A = Mat2{{{{c, d}, {d, c}}}};
            t.Aplus = Mat2{{{{e, f}, {f, e}}}};
            break;
        }
        case FamilyForm::RowColumnConstant: {
            long long a = pick(), b = pick();
            t.Aminus = Mat2{{{{a, b}, {a, b}}}};
            t.A = Mat2{{{{pick(), pick()}, {pick(), pick()}}}};
            long long p = pick(), q = pick();
            t.Aplus = Mat2{{{{p, p}, {q, q}}}};
            break;
        }
        case FamilyForm::SwapTranspose: {
            long long b0 = pick(), b1 = pick(), b2 = pick(), b3 = pick();
            long long a0 = pick(), a1 = pick(), a2 = pick();
            t.Aminus = Mat2{{{{b0, b1}, {b2, b3}}}};
            t.A = Mat2{{{{a0, a1}, {a1, a2}}}};
            t.Aplus = Mat2{{{{b2, b0}, {b3, b1}}}};
            break;
        }
        default:
            throw std::invalid_argument(
                "random instances are only generated for the sound families");
    }
    return t;
}

}  // namespace

FamilyValidationReport validate_family_form(FamilyForm form, int trials,
                                            int kMax, unsigned long seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (kMax < 1) throw std::invalid_argument("kMax must be at least 1");
    FamilyValidationReport rep;
    rep.form = form;
    rep.trials = trials;
    rep.kMax = kMax;
    rep.seed = seed;
    rep.expectedToHold = form == FamilyForm::Circulant ||
                         form == FamilyForm::RowColumnConstant ||
                         form == FamilyForm::SwapTranspose;
    if (rep.expectedToHold) {
        std::mt19937 rng(static_cast<std::uint32_t>(seed));
        for (int trial = 0; trial < trials; ++trial) {
            Triplet t = draw_family_instance(form, rng);
            int bad = first_diag_failure(t, kMax);
            if (bad >= 0) {
                ++rep.failures;
                if (!rep.counterexampleFound) {
                    rep.counterexampleFound = true;
                    rep.counterexample = t;
                    rep.counterexampleFirstK = bad;
                    auto [lhs, rhs] = diag_power_entries(t, bad);
                    rep.counterexampleLhs = lhs.convert_to<long long>();
                    rep.counterexampleRhs = rhs.convert_to<long long>();
                }
            }
        }
        rep.ok = rep.failures == 0;
        rep.note = rep.ok
                       ? "all random instances satisfy the diagonal identity"
                       : "structured form violated the diagonal identity at " +
                             triplet_to_string(rep.counterexample);
    } else {
        Mat2 id = Mat2::identity();
        Triplet t;
        if (form == FamilyForm::NearCirculant) {
            t = Triplet{id, id, Mat2{{{{1, 0}, {1, 0}}}}};
        } else {
            t = Triplet{Mat2{{{{1, 0}, {1, 0}}}}, id, id};
        }
        rep.trials = 1;
        rep.counterexample = t;
        rep.counterexampleFirstK = first_diag_failure(t, kMax);
        auto [lhs, rhs] = diag_power_entries(t, 1);
        rep.counterexampleLhs = lhs.convert_to<long long>();
        rep.counterexampleRhs = rhs.convert_to<long long>();
        rep.counterexampleFound =
            matches_family(form, t) && rep.counterexampleFirstK >= 0;
        rep.failures = rep.counterexampleFound ? 1 : 0;
        rep.ok = rep.counterexampleFound && rep.counterexampleLhs == 1 &&
                 rep.counterexampleRhs == 0;
        std::ostringstream note;
        note << "counterexample " << triplet_to_string(t)
             << ": diagonal entries at k = 1 are " << rep.counterexampleLhs
             << " and " << rep.counterexampleRhs
             << " (first failing power: k = " << rep.counterexampleFirstK
             << "), so this variant does not force the identity";
        rep.note = note.str();
    }
    return rep;
}

std::array<Series, 2> solve_coupled_g(const Triplet& t, int M, int order) {
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("order must be a positive even integer");
    auto cons = [&](long long v) { return Series::constant(Rational(v), order); };
    const Series z2 = Series::monomial(2, 1, order);
    const Series one = Series::one(order);
    std::array<Series, 2> g{Series(order), Series(order)};
    long long detA = t.A.det();
    for (int pass = 0; pass <= order / 2 + 1; ++pass) {
        Series denom = one - g[0].scaled(t.A.at(0, 0)) -
                       g[1].scaled(t.A.at(1, 1)) +
                       (g[0] * g[1]).scaled(detA);
        Series dinv = denom.inverse();
        std::array<Series, 2> next{Series(order), Series(order)};
        for (int d = 0; d < 2; ++d) {
            int dp = 1 - d;
            const Mat2& am = t.Aminus;
            const Mat2& a = t.A;
            const Mat2& ap = t.Aplus;
            Series term =
                ((one - g[dp].scaled(a.at(dp, dp))) * g[d])
                    .scaled(am.at(d, d) * ap.at(d, d)) +
                (g[dp] * g[d]).scaled(am.at(d, dp) * a.at(dp, d) * ap.at(d, d)) +
                (g[d] * g[dp]).scaled(am.at(d, d) * a.at(d, dp) * ap.at(dp, d)) +
                ((one - g[d].scaled(a.at(d, d))) * g[dp])
                    .scaled(am.at(d, dp) * ap.at(dp, d));
            next[d] = z2 * (cons(M) + term * dinv);
        }
        g = next;
    }
    return g;
}

CubicData make_cubic_data(const Triplet& t, int M, int order) {
    CubicData data;
    data.trA = t.A.trace();
    data.detA = t.A.det();
    data.eta4 = (t.Aminus * t.Aplus).at(0, 0);
    data.eta6 = (t.Aminus * t.A * t.Aplus).at(0, 0);
    data.M = M;
    const Series z2 = Series::monomial(2, 1, order);
    data.B = Series::constant(Rational(-data.trA), order) -
             z2.scaled(Rational(M) * data.detA + data.eta6 -
                       Rational(data.eta4) * data.trA);
    data.C = Series::one(order) +
             z2.scaled(Rational(M) * data.trA - data.eta4);
    data.D = z2.scaled(Rational(-M));
    Series detS = Series::constant(Rational(data.detA), order);
    data.discI = data.B * data.B - (data.C * detS).scaled(3);
    data.discJ = (data.B * data.C * detS).scaled(9) -
                 (data.D * detS * detS).scaled(27) -
                 (data.B * data.B * data.B).scaled(2);
    return data;
}

CubicReport cubic_criterion_check(const Triplet& t, int M, int order) {
    if (order < 6 || order % 2 != 0)
        throw std::invalid_argument("order must be an even integer >= 6");
    CubicReport rep;
    auto [c4, c6] = diag_conditions(t);
    rep.diag4 = c4;
    rep.diag6 = c6;
    rep.data = make_cubic_data(t, M, order);

    std::vector<int> mvec{M, M};
    std::vector<Series> sol = solve_genfun_matrices(
        mvec, to_rows(t.Aminus), to_rows(t.A), to_rows(t.Aplus), order);
    rep.g0 = sol[0];
    rep.g1 = sol[1];

    std::array<Series, 2> coupled = solve_coupled_g(t, M, order);
    rep.coupledMatches = coupled[0] == rep.g0 && coupled[1] == rep.g1;

    rep.gEqual46 = rep.g0.coeff(4) == rep.g1.coeff(4) &&
                   rep.g0.coeff(6) == rep.g1.coeff(6);
    rep.equivalenceOk = (rep.diag4 && rep.diag6) == rep.gEqual46;

    // Low-order structure: g(2) = M; g(4) = M * (Aminus Aplus) diagonal;
    // g(6) = (Aminus diag(g(4)) Aplus) diagonal + M^2 * (Aminus A Aplus) diagonal.
    bool proofs = true;
    for (int d = 0; d < 2; ++d) {
        const Series& gd = d == 0 ? rep.g0 : rep.g1;
        proofs = proofs && gd.coeff(2) == Rational(M);
        Mat2 p4 = t.Aminus * t.Aplus;
        proofs = proofs && gd.coeff(4) == Rational(M) * p4.at(d, d);
        Mat2 p6 = t.Aminus * t.A * t.Aplus;
        Rational inner = Rational(t.Aminus.at(d, 0)) * rep.g0.coeff(4) *
                             t.Aplus.at(0, d) +
                         Rational(t.Aminus.at(d, 1)) * rep.g1.coeff(4) *
                             t.Aplus.at(1, d);
        proofs = proofs &&
                 gd.coeff(6) == inner + Rational(M) * M * p6.at(d, d);
    }
    rep.proofIdentitiesOk = proofs;

    rep.gEqualFull = rep.g0 == rep.g1;
    Series residual = (rep.g0 * rep.g0 * rep.g0).scaled(rep.data.detA) +
                      rep.data.B * rep.g0 * rep.g0 + rep.data.C * rep.g0 +
                      rep.data.D;
    rep.cubicResidualZero = residual.is_zero();
    return rep;
}

namespace {

// The three real roots of detA*g^3 + B*g^2 + C*g + D at z0 in the
// three-real-root regime, via the trigonometric resolution.
std::array<Float, 3> cosine_roots(const Float& a, const Float& b,
                                  const Float& i0, const Float& j0) {
    Float pi = boost::math::constants::pi<Float>();
    Float sqrtI = sqrt(i0);
    Float arg = (a < 0 ? Float(-j0) : j0) / (2 * i0 * sqrtI);
    if (arg > 1) arg = 1;
    if (arg < -1) arg = -1;
    Float theta = acos(arg);
    std::array<Float, 3> roots;
    for (int k = 0; k < 3; ++k) {
        roots[static_cast<size_t>(k)] =
            -b / (3 * a) +
            (2 * sqrtI / (3 * abs(a))) * cos(theta / 3 - 2 * pi * k / 3);
    }
    return roots;
}

}  // namespace

ClosedFormReport closed_form_eval(const CubicData& data, const Rational& z0,
                                  const Series& g) {
    ClosedFormReport rep;
    rep.seriesValue = to_float(g.eval(z0));

    const Rational bq = data.B.eval(z0);
    const Rational cq = data.C.eval(z0);
    const Rational dq = data.D.eval(z0);
    const Rational i0q = data.discI.eval(z0);
    const Rational j0q = data.discJ.eval(z0);
    const Rational disc = j0q * j0q - i0q * i0q * i0q * 4;

    const Float a = Float(data.detA);
    const Float b = to_float(bq);
    const Float c = to_float(cq);
    const Float d = to_float(dq);
    const Float i0 = to_float(i0q);
    const Float j0 = to_float(j0q);

    if (data.detA == 0) {
        if (bq == 0) {
            if (cq == 0) {
                rep.route = "degenerate: quadratic and linear coefficients both vanish";
            } else {
                rep.value = -d / c;
                rep.ok = true;
                rep.route = "linear branch (detA = 0, B = 0): g = -D/C";
            }
        } else {
            Rational rad = cq * cq - Rational(4) * bq * dq;
            if (rad < 0) {
                rep.route = "quadratic branch inapplicable: C^2 - 4BD < 0";
            } else {
                rep.value = (-c + sqrt(to_float(rad))) / (2 * b);
                rep.ok = true;
                rep.route = "quadratic branch (detA = 0): g = (-C + sqrt(C^2-4BD)) / (2B)";
            }
        }
        rep.variantOk = rep.ok;
        rep.variantValue = rep.value;
        rep.variantRoute = rep.route;
    } else {
        if (disc > 0) {
            Float sd = sqrt(to_float(disc));
            Float uplus = signed_cbrt((j0 + sd) / 2);
            Float uminus = signed_cbrt((j0 - sd) / 2);
            rep.value = (-b + uplus + uminus) / (3 * a);
            rep.ok = true;
            rep.route = "real cube-root branch (J^2 - 4I^3 > 0, one real root)";
        } else if (i0q == 0) {
            // disc <= 0 with I = 0 forces J = 0: triple root.
            rep.value = -b / (3 * a);
            rep.ok = true;
            rep.route = "triple root branch (I = J = 0)";
        } else if (i0q < 0) {
            rep.route = "no branch: I < 0 with J^2 - 4I^3 <= 0 is impossible";
        } else {
            auto roots = cosine_roots(a, b, i0, j0);
            size_t best = 0;
            for (size_t k = 1; k < roots.size(); ++k)
                if (abs(roots[k]) < abs(roots[best])) best = k;
            rep.value = roots[best];
            rep.ok = true;
            rep.route =
                "trigonometric branch (J^2 - 4I^3 <= 0, three real roots), "
                "minimal-modulus root k=" +
                std::to_string(best);
        }

        // Fixed-branch variant: route by the characteristic roots of A and
        // always take the 2*pi/3-offset cosine branch.
        long long chiDisc = data.trA * data.trA - 4 * data.detA;
        if (chiDisc >= 0) {
            if (disc < 0) {
                rep.variantRoute =
                    "real cube-root form selected by real characteristic roots, "
                    "but J^2 - 4I^3 < 0 at z0: cube roots are complex; value "
                    "unavailable (reported, not clamped)";
            } else {
                Float sd = sqrt(to_float(disc));
                rep.variantValue =
                    (-b + signed_cbrt((j0 + sd) / 2) + signed_cbrt((j0 - sd) / 2)) /
                    (3 * a);
                rep.variantOk = true;
                rep.variantRoute = "real cube-root form (characteristic roots real)";
            }
        } else {
            if (i0q <= 0) {
                rep.variantRoute =
                    "cosine form selected by complex characteristic roots, but "
                    "I <= 0 at z0: sqrt(I) not real; value unavailable";
            } else {
                Float sqrtI = sqrt(i0);
                Float arg = j0 / (2 * i0 * sqrtI);
                if (arg > 1 || arg < -1) {
                    rep.variantRoute =
                        "cosine form selected by complex characteristic roots, but "
                        "|J / (2 I^{3/2})| > 1 at z0; value unavailable";
                } else {
                    Float pi = boost::math::constants::pi<Float>();
                    rep.variantValue =
                        (-b + 2 * sqrtI * cos((2 * pi + acos(arg)) / 3)) / (3 * a);
                    rep.variantOk = true;
                    rep.variantRoute =
                        "cosine form, fixed 2*pi branch (characteristic roots complex)";
                }
            }
        }
    }

    if (rep.ok) rep.absDiff = abs(rep.value - rep.seriesValue);
    if (rep.variantOk) rep.variantAbsDiff = abs(rep.variantValue - rep.seriesValue);
    if (!rep.ok && rep.route.empty()) rep.route = "no value produced";
    if (!rep.variantOk && rep.variantRoute.empty())
        rep.variantRoute = "no value produced";
    return rep;
}

}  // namespace dyckx
