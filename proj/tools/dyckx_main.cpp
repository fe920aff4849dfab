#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dyckx/genfun.hpp"
#include "dyckx/identities.hpp"
#include "dyckx/kernel.hpp"
#include "dyckx/presentations.hpp"
#include "dyckx/spec_io.hpp"
#include "dyckx/zeta.hpp"

namespace {

using namespace dyckx;

void write_output(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + outPath);
    out << text;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void print_summary(bool ok, long long checked, int order) {
    std::cout << "ok=" << bool_str(ok) << " checked=" << checked
              << " order=" << order << "\n";
}

int even_at_least(int n, int floor_value) {
    int v = n < floor_value ? floor_value : n;
    return v % 2 == 0 ? v : v + 1;
}

SubshiftSpec random_small_spec(std::mt19937& rng) {
    std::uniform_int_distribution<int> mdist(1, 2);
    std::vector<int> m{mdist(rng), mdist(rng)};
    auto mat = [&]() {
        IntMatrix a(2, std::vector<int>(2, 0));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                std::uniform_int_distribution<int> edist(0, m[static_cast<size_t>(j)]);
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = edist(rng);
            }
        return a;
    };
    return SubshiftSpec::from_matrices(m, mat(), mat(), mat());
}

Triplet random_triplet(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    auto mat = [&]() {
        Mat2 m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = dist(rng);
        return m;
    };
    Triplet t;
    t.Aminus = mat();
    t.A = mat();
    t.Aplus = mat();
    return t;
}

ZetaVariant parse_variant(const std::string& text) {
    ZetaVariant variant;
    if (text.empty() || text == "GA,AG") return variant;
    if (text == "AG,GA") {
        variant.minusFactorGA = false;
        variant.plusFactorAG = false;
    } else if (text == "GA,GA") {
        variant.plusFactorAG = false;
    } else if (text == "AG,AG") {
        variant.minusFactorGA = false;
    } else {
        throw std::invalid_argument(
            "unknown zeta variant \"" + text +
            "\" (expected one of GA,AG | AG,GA | GA,GA | AG,AG)");
    }
    return variant;
}

bool factors_match(const ZetaParts& parts, const ZetaParts& oracle, int through) {
    return parts.neutral.agrees_with(oracle.neutral, through) &&
           parts.nonPositive.agrees_with(oracle.nonPositive, through) &&
           parts.nonNegative.agrees_with(oracle.nonNegative, through) &&
           parts.total.agrees_with(oracle.total, through);
}

// ---- command bodies -------------------------------------------------------

int run_genfun(const std::string& specPath, int order, const std::string& outPath) {
    SubshiftSpec spec = spec_from_json_file(specPath);
    GenFunSolution solution = solve_genfun(spec, order);
    write_output(genfun_output_json(spec, solution, order), outPath);
    return 0;
}

int run_zeta(const std::string& specPath, int nmax, const std::string& variantText,
             std::uint64_t budget, const std::string& outPath) {
    SubshiftSpec spec = spec_from_json_file(specPath);
    ZetaVariant variant = parse_variant(variantText);
    int order = even_at_least(nmax, 2);
    ZetaParts parts = zeta_parts(spec, order, variant);
    PeriodicCensus census = periodic_census(spec, nmax, budget);
    ZetaParts oracle = oracle_parts(census);
    bool ok = factors_match(parts, oracle, nmax);
    write_output(zeta_output_json(spec, parts, oracle, order, nmax, ok), outPath);
    return ok ? 0 : 1;
}

int run_census(const std::string& specPath, int nmax, std::uint64_t budget,
               const std::string& format, const std::string& outPath) {
    SubshiftSpec spec = spec_from_json_file(specPath);
    PeriodicCensus census = periodic_census(spec, nmax, budget);
    if (format == "tsv")
        write_output(census_output_tsv(census), outPath);
    else
        write_output(census_output_json(census), outPath);
    return 0;
}

int run_presentation(const std::string& aminus, const std::string& a,
                     const std::string& aplus, int m, const std::string& format,
                     const std::string& outPath) {
    Triplet t{mat2_from_csv(aminus), mat2_from_csv(a), mat2_from_csv(aplus)};
    PresentationGraph graph = build_presentation(t, m);
    if (format == "dot")
        write_output(graph_to_dot(graph), outPath);
    else
        write_output(graph_to_json(graph), outPath);
    return 0;
}

int run_classify(const std::string& format, int slowOrder, const std::string& outPath) {
    ClassificationReport report = classify_triplets(true, slowOrder);
    if (format == "tsv")
        write_output(classification_to_tsv(report), outPath);
    else
        write_output(classification_to_json(report), outPath);
    return report.slowCheckOk && report.symmetryConsistent ? 0 : 1;
}

int run_canonicalize(const std::string& specPath, const std::string& outPath) {
    SubshiftSpec spec = spec_from_json_file(specPath);
    auto [canonical, map] = canonicalize(spec);
    (void)canonical;
    write_output(canonicalize_output_json(map), outPath);
    return 0;
}

// ---- verify subcommands ----------------------------------------------------

int verify_powers(int trials, int kmax, unsigned long seed) {
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    int failures = 0;
    int drawn = 0;
    int checked = 0;
    std::vector<std::string> failureNotes;
    const int maxDraws = trials * 1000;
    while (checked < trials && drawn < maxDraws) {
        Triplet t = random_triplet(rng, 0, 3);
        ++drawn;
        auto [c4, c6] = diag_conditions(t);
        if (!c4 || !c6) continue;
        ++checked;
        PowerDiagonalReport rep = power_diagonal_check(t, kmax);
        if (!rep.holds) {
            ++failures;
            if (failureNotes.size() < 5)
                failureNotes.push_back("failure at " + triplet_to_string(t) +
                                       " k=" + std::to_string(rep.firstFailureK));
        }
    }
    bool ok = failures == 0 && checked == trials;
    print_summary(ok, checked, kmax);
    std::cout << "draws=" << drawn << " failures=" << failures << "\n";
    for (const std::string& note : failureNotes) std::cout << note << "\n";
    return ok ? 0 : 1;
}

int verify_cubic(int order, int quickOrder) {
    int checked = 0;
    int members = 0;
    int failures = 0;
    std::vector<std::string> failureNotes;
    auto note_failure = [&](const Triplet& t, const std::string& what) {
        ++failures;
        if (failureNotes.size() < 5)
            failureNotes.push_back("failure at " + triplet_to_string(t) + ": " + what);
    };
    for (int am = 0; am < 16; ++am)
        for (int a = 0; a < 16; ++a)
            for (int ap = 0; ap < 16; ++ap) {
                Triplet t;
                t.Aminus = Mat2{{{{am & 1, (am >> 1) & 1},
                                  {(am >> 2) & 1, (am >> 3) & 1}}}};
                t.A = Mat2{{{{a & 1, (a >> 1) & 1}, {(a >> 2) & 1, (a >> 3) & 1}}}};
                t.Aplus = Mat2{{{{ap & 1, (ap >> 1) & 1},
                                 {(ap >> 2) & 1, (ap >> 3) & 1}}}};
                ++checked;
                CubicReport quick = cubic_criterion_check(t, 1, quickOrder);
                if (!quick.equivalenceOk) note_failure(t, "equivalence");
                if (!quick.proofIdentitiesOk) note_failure(t, "low-order identities");
                if (!quick.coupledMatches) note_failure(t, "coupled-form route");
                if (quick.diag4 && quick.diag6) {
                    ++members;
                    CubicReport full = cubic_criterion_check(t, 1, order);
                    if (!full.gEqualFull) note_failure(t, "g0 != g1 at full order");
                    if (!full.cubicResidualZero) note_failure(t, "cubic residual");
                }
            }
    bool ok = failures == 0;
    print_summary(ok, checked, order);
    std::cout << "conditionHolders=" << members << " failures=" << failures << "\n";
    for (const std::string& note : failureNotes) std::cout << note << "\n";
    return ok ? 0 : 1;
}

int verify_zeta(int count, int nmax, unsigned long seed, std::uint64_t budget) {
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    int failures = 0;
    int checked = 0;
    std::vector<std::string> failureNotes;
    int order = even_at_least(nmax, 2);
    auto check_spec = [&](const SubshiftSpec& spec, const std::string& name) {
        ++checked;
        PeriodicCensus census = periodic_census(spec, nmax, budget);
        ZetaParts oracle = oracle_parts(census);
        ZetaParts parts = zeta_parts(spec, order);
        if (!factors_match(parts, oracle, nmax)) {
            ++failures;
            if (failureNotes.size() < 5)
                failureNotes.push_back("mismatch on " + name);
        }
    };
    check_spec(SubshiftSpec::full_dyck(2), "full two-class shift");
    for (int i = 0; i < count; ++i)
        check_spec(random_small_spec(rng), "random spec " + std::to_string(i));
    bool ok = failures == 0;
    print_summary(ok, checked, order);
    std::cout << "nmax=" << nmax << " failures=" << failures << "\n";
    for (const std::string& note : failureNotes) std::cout << note << "\n";
    return ok ? 0 : 1;
}

int verify_uniform(int order) {
    int checked = 0;
    int failures = 0;
    std::vector<std::string> failureNotes;
    for (int m = 1; m <= 3; ++m)
        for (int km = 1; km <= m; ++km)
            for (int k = 1; k <= m; ++k)
                for (int kp = 1; kp <= m; ++kp)
                    for (int n = 1; n <= 3; ++n) {
                        ++checked;
                        Series g = uniform_genfun(m, km, k, kp, n, order);
                        Series residual = uniform_genfun_residual(g, m, km, k, kp, n);
                        if (!residual.is_zero()) {
                            ++failures;
                            if (failureNotes.size() < 5)
                                failureNotes.push_back(
                                    "nonzero residual at M=" + std::to_string(m) +
                                    " Kminus=" + std::to_string(km) +
                                    " K=" + std::to_string(k) +
                                    " Kplus=" + std::to_string(kp) +
                                    " N=" + std::to_string(n));
                        }
                    }
    bool ok = failures == 0;
    print_summary(ok, checked, order);
    std::cout << "failures=" << failures << "\n";
    for (const std::string& note : failureNotes) std::cout << note << "\n";
    return ok ? 0 : 1;
}

int verify_families(int trials, int kmax, unsigned long seed) {
    const FamilyForm forms[] = {
        FamilyForm::Circulant, FamilyForm::RowColumnConstant,
        FamilyForm::SwapTranspose, FamilyForm::NearCirculant,
        FamilyForm::NearRowColumnConstant};
    int checked = 0;
    bool ok = true;
    std::vector<std::string> lines;
    for (FamilyForm form : forms) {
        ++checked;
        FamilyValidationReport rep = validate_family_form(form, trials, kmax, seed);
        ok = ok && rep.ok;
        lines.push_back(std::string(family_form_name(form)) + ": " +
                        (rep.ok ? "ok" : "FAILED") + " — " + rep.note);
    }
    print_summary(ok, checked, kmax);
    for (const std::string& line : lines) std::cout << line << "\n";
    return ok ? 0 : 1;
}

int verify_reversal(int count, int nmax, unsigned long seed) {
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    int failures = 0;
    int checked = 0;
    std::vector<std::string> failureNotes;
    int order = even_at_least(nmax, 2);
    auto note_failure = [&](const Triplet& t, const std::string& what) {
        ++failures;
        if (failureNotes.size() < 5)
            failureNotes.push_back("failure at " + triplet_to_string(t) + ": " + what);
    };
    for (int i = 0; i < count; ++i) {
        Triplet t = random_triplet(rng, 0, 1);
        ++checked;
        Triplet rev = time_reverse(t);
        Triplet sw = swap_indices(t);
        if (time_reverse(rev) != t) note_failure(t, "reversal not an involution");
        if (swap_indices(sw) != t) note_failure(t, "index swap not an involution");

        SubshiftSpec spec = triplet_spec(t);
        PeriodicCensus census = periodic_census(spec, nmax);
        PeriodicCensus revCensus = periodic_census(triplet_spec(rev), nmax);
        PeriodicCensus swCensus = periodic_census(triplet_spec(sw), nmax);
        if (census.total != revCensus.total ||
            census.neutral != revCensus.neutral ||
            census.nonPositive != revCensus.nonNegative ||
            census.nonNegative != revCensus.nonPositive)
            note_failure(t, "reversal census");
        if (census.total != swCensus.total || census.neutral != swCensus.neutral ||
            census.nonPositive != swCensus.nonPositive ||
            census.nonNegative != swCensus.nonNegative)
            note_failure(t, "index-swap census");

        ZetaParts parts = zeta_parts(spec, order);
        ZetaParts revParts = zeta_parts(triplet_spec(rev), order);
        if (!(parts.nonPositive == revParts.nonNegative &&
              parts.nonNegative == revParts.nonPositive &&
              parts.neutral == revParts.neutral && parts.total == revParts.total))
            note_failure(t, "reversal zeta factors");
    }
    bool ok = failures == 0;
    print_summary(ok, checked, order);
    std::cout << "nmax=" << nmax << " failures=" << failures << "\n";
    for (const std::string& note : failureNotes) std::cout << note << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for two-letter exclusions of generalized bracket shifts"};
    app.require_subcommand(1);

    std::string specPath, outPath, format = "json", variantText, aminus, a, aplus;
    int order = 24;
    int nmax = 10;
    int quickOrder = 6;
    int slowOrder = 8;
    int trials = 1000;
    int kmax = 12;
    int count = 50;
    int reversalCount = 20;
    int m = 1;
    unsigned long seed = 20240801UL;
    std::uint64_t budget = 1'000'000'000ULL;
    int exitCode = 0;

    CLI::App* genfunCmd = app.add_subcommand("genfun", "excursion series per bracket class");
    genfunCmd->add_option("--spec", specPath, "spec JSON file")->required();
    genfunCmd->add_option("--order", order, "truncation order (even)");
    genfunCmd->add_option("--out", outPath, "output file (default stdout)");
    genfunCmd->callback([&]() { exitCode = run_genfun(specPath, order, outPath); });

    CLI::App* zetaCmd = app.add_subcommand(
        "zeta", "zeta factors with a brute-force periodic-point cross-check");
    zetaCmd->add_option("--spec", specPath, "spec JSON file")->required();
    zetaCmd->add_option("--nmax", nmax, "compare through this period");
    zetaCmd->add_option("--variant", variantText,
                        "matrix-order variant: GA,AG (default) | AG,GA | GA,GA | AG,AG");
    zetaCmd->add_option("--budget", budget, "census node budget");
    zetaCmd->add_option("--out", outPath, "output file (default stdout)");
    zetaCmd->callback(
        [&]() { exitCode = run_zeta(specPath, nmax, variantText, budget, outPath); });

    CLI::App* censusCmd = app.add_subcommand("census", "periodic points by multiplier class");
    censusCmd->add_option("--spec", specPath, "spec JSON file")->required();
    censusCmd->add_option("--nmax", nmax, "largest period");
    censusCmd->add_option("--budget", budget, "census node budget");
    censusCmd->add_option("--format", format, "json|tsv");
    censusCmd->add_option("--out", outPath, "output file (default stdout)");
    censusCmd->callback(
        [&]() { exitCode = run_census(specPath, nmax, budget, format, outPath); });

    CLI::App* presentationCmd =
        app.add_subcommand("presentation", "two-block presentation graph of a triplet");
    presentationCmd->add_option("--aminus", aminus, "opener-pair matrix a,b,c,d")->required();
    presentationCmd->add_option("--a", a, "mixed-pair matrix a,b,c,d")->required();
    presentationCmd->add_option("--aplus", aplus, "closer-pair matrix a,b,c,d")->required();
    presentationCmd->add_option("--m", m, "constant copy count");
    presentationCmd->add_option("--format", format, "json|dot");
    presentationCmd->add_option("--out", outPath, "output file (default stdout)");
    presentationCmd->callback(
        [&]() { exitCode = run_presentation(aminus, a, aplus, m, format, outPath); });

    CLI::App* classifyCmd = app.add_subcommand(
        "classify", "sweep all 0-1 triplets and classify the valid ones into orbits");
    classifyCmd->add_option("--format", format, "json|tsv");
    classifyCmd->add_option("--slow-order", slowOrder,
                            "order for the independent series cross-check");
    classifyCmd->add_option("--out", outPath, "output file (default stdout)");
    classifyCmd->callback([&]() { exitCode = run_classify(format, slowOrder, outPath); });

    CLI::App* canonicalizeCmd = app.add_subcommand(
        "canonicalize", "rewrite explicit subsets as initial intervals plus a relabeling");
    canonicalizeCmd->add_option("--spec", specPath, "spec JSON file")->required();
    canonicalizeCmd->add_option("--out", outPath, "output file (default stdout)");
    canonicalizeCmd->callback([&]() { exitCode = run_canonicalize(specPath, outPath); });

    CLI::App* verifyCmd = app.add_subcommand("verify", "identity checks; first line is ok=<bool> checked=<n> order=<K>");
    verifyCmd->require_subcommand(1);

    CLI::App* powersCmd = verifyCmd->add_subcommand(
        "powers", "diagonal conditions propagate to all matrix powers");
    powersCmd->add_option("--trials", trials, "conditioned triplets to test");
    powersCmd->add_option("--kmax", kmax, "largest power");
    powersCmd->add_option("--seed", seed, "random seed");
    powersCmd->callback([&]() { exitCode = verify_powers(trials, kmax, seed); });

    CLI::App* cubicCmd = verifyCmd->add_subcommand(
        "cubic", "series equality criterion and the cubic identity over all 0-1 triplets");
    cubicCmd->add_option("--order", order, "full truncation order (even)");
    cubicCmd->add_option("--quick-order", quickOrder, "sweep truncation order (even)");
    cubicCmd->callback([&]() { exitCode = verify_cubic(order, quickOrder); });

    CLI::App* zetaVerifyCmd = verifyCmd->add_subcommand(
        "zeta", "zeta factors against the brute-force census on random specs");
    zetaVerifyCmd->add_option("--count", count, "random specs");
    zetaVerifyCmd->add_option("--nmax", nmax, "compare through this period");
    zetaVerifyCmd->add_option("--seed", seed, "random seed");
    zetaVerifyCmd->add_option("--budget", budget, "census node budget");
    zetaVerifyCmd->callback(
        [&]() { exitCode = verify_zeta(count, nmax, seed, budget); });

    CLI::App* uniformCmd = verifyCmd->add_subcommand(
        "uniform", "closed-form constant-parameter series satisfies its quadratic");
    uniformCmd->add_option("--order", order, "truncation order (even)");
    uniformCmd->callback([&]() { exitCode = verify_uniform(order); });

    CLI::App* familiesCmd = verifyCmd->add_subcommand(
        "families", "structured families force the diagonal identity; variants refuted");
    familiesCmd->add_option("--trials", trials, "random instances per family");
    familiesCmd->add_option("--kmax", kmax, "largest power");
    familiesCmd->add_option("--seed", seed, "random seed");
    familiesCmd->callback([&]() { exitCode = verify_families(trials, kmax, seed); });

    CLI::App* reversalCmd = verifyCmd->add_subcommand(
        "reversal", "time reversal and index swap preserve censuses; factors swap");
    reversalCmd->add_option("--count", reversalCount, "random triplets");
    reversalCmd->add_option("--nmax", nmax, "census depth");
    reversalCmd->add_option("--seed", seed, "random seed");
    reversalCmd->callback([&]() { exitCode = verify_reversal(reversalCount, nmax, seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const dyckx::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const dyckx::BudgetExceeded& e) {
        std::cerr << "census budget exceeded (limit " << budget
                  << " nodes): " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exitCode;
}
