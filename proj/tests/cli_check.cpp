#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

const std::filesystem::path& scratch_dir() {
    static const std::filesystem::path dir = [] {
        std::filesystem::path d = std::filesystem::current_path() / "cli_scratch";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

RunResult run_cli(const std::string& args) {
    const auto outFile = scratch_dir() / "stdout.txt";
    const auto errFile = scratch_dir() / "stderr.txt";
    std::string cmd = std::string("\"") + DYCKX_CLI_PATH + "\" " + args + " > " +
                      outFile.string() + " 2> " + errFile.string();
    int rc = std::system(cmd.c_str());
    RunResult result;
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    result.out = slurp(outFile);
    result.err = slurp(errFile);
    return result;
}

std::string full_shift_spec_path() {
    static const std::string path = [] {
        auto p = scratch_dir() / "full2.json";
        spit(p,
             "{\"N\": 2, \"M\": [1, 1],"
             " \"Aminus\": [[1, 1], [1, 1]],"
             " \"A\": [[1, 1], [1, 1]],"
             " \"Aplus\": [[1, 1], [1, 1]]}\n");
        return p.string();
    }();
    return path;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

size_t count_substr(const std::string& text, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("help exits cleanly") {
    RunResult r = run_cli("--help");
    CHECK(r.status == 0);
    CHECK(r.out.find("genfun") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("unknown flags are input errors") {
    RunResult r = run_cli("genfun --bogus");
    CHECK(r.status == 2);
}

TEST_CASE("missing subcommand is an input error") {
    RunResult r = run_cli("");
    CHECK(r.status == 2);
}

TEST_CASE("nonexistent spec file") {
    RunResult r = run_cli("genfun --spec does_not_exist.json");
    CHECK(r.status == 2);
    CHECK(r.err.find("cannot open spec file") != std::string::npos);
}

TEST_CASE("malformed JSON reports line and column") {
    auto bad = scratch_dir() / "bad.json";
    spit(bad, "{\n  \"N\": 2,,\n}\n");
    RunResult r = run_cli("genfun --spec " + bad.string());
    CHECK(r.status == 2);
    CHECK(r.err.find("malformed JSON at line 2") != std::string::npos);
    CHECK(r.err.find("column") != std::string::npos);
}

TEST_CASE("invalid entries are input errors") {
    auto bad = scratch_dir() / "entry.json";
    spit(bad,
         "{\"N\": 2, \"M\": [1, 1], \"Aminus\": [[1, 3], [1, 1]],"
         " \"A\": [[1, 1], [1, 1]], \"Aplus\": [[1, 1], [1, 1]]}\n");
    RunResult r = run_cli("genfun --spec " + bad.string());
    CHECK(r.status == 2);
    CHECK(r.err.find("input error") != std::string::npos);
}

TEST_CASE("excursion series command is exact and deterministic") {
    RunResult r1 = run_cli("genfun --spec " + full_shift_spec_path() + " --order 12");
    CHECK(r1.status == 0);
    CHECK(r1.out.find("\"g\"") != std::string::npos);
    CHECK(r1.out.find("\"1344\"") != std::string::npos);
    RunResult r2 = run_cli("genfun --spec " + full_shift_spec_path() + " --order 12");
    CHECK(r1.out == r2.out);

    auto outFile = scratch_dir() / "genfun_out.json";
    RunResult r3 = run_cli("genfun --spec " + full_shift_spec_path() +
                           " --order 12 --out " + outFile.string());
    CHECK(r3.status == 0);
    CHECK(slurp(outFile) == r1.out);
}

TEST_CASE("zeta factors validate against the census") {
    RunResult r = run_cli("zeta --spec " + full_shift_spec_path() + " --nmax 6");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"ok\": true") != std::string::npos);
    CHECK(r.out.find("\"oracle\"") != std::string::npos);
}

TEST_CASE("zeta variant flag") {
    RunResult same = run_cli("zeta --spec " + full_shift_spec_path() +
                             " --nmax 4 --variant AG,GA");
    CHECK(same.status == 0);  // both orders coincide on the symmetric shift
    RunResult bad = run_cli("zeta --spec " + full_shift_spec_path() +
                            " --nmax 4 --variant bogus");
    CHECK(bad.status == 2);
    CHECK(bad.err.find("unknown zeta variant") != std::string::npos);
}

TEST_CASE("census table output") {
    RunResult r = run_cli("census --spec " + full_shift_spec_path() +
                          " --nmax 4 --format tsv");
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "n\ttotal\tnonPositive\tnonNegative\tneutral");
    CHECK(r.out.find("2\t12\t8\t8\t4\n") != std::string::npos);
}

TEST_CASE("census node budget is enforced") {
    RunResult r = run_cli("census --spec " + full_shift_spec_path() +
                          " --nmax 8 --budget 5");
    CHECK(r.status == 2);
    CHECK(r.err.find("budget exceeded") != std::string::npos);
    CHECK(r.err.find("limit 5") != std::string::npos);
}

TEST_CASE("presentation graph export") {
    RunResult dot = run_cli(
        "presentation --aminus 1,1,1,1 --a 1,1,1,1 --aplus 1,1,1,1 --format dot");
    CHECK(dot.status == 0);
    CHECK(first_line(dot.out) == "digraph presentation {");
    CHECK(count_substr(dot.out, " -> ") == 48);
    CHECK(count_substr(dot.out, "[label=") == 14 + 48);

    RunResult json = run_cli(
        "presentation --aminus 1,1,1,1 --a 1,1,1,1 --aplus 1,1,1,1");
    CHECK(json.status == 0);
    CHECK(json.out.find("\"allVerticesCovered\": true") != std::string::npos);

    RunResult reducible = run_cli(
        "presentation --aminus 1,1,1,1 --a 1,0,0,1 --aplus 1,1,1,1");
    CHECK(reducible.status == 2);
    CHECK(reducible.err.find("input error") != std::string::npos);
}

TEST_CASE("canonicalize emits the relabeling maps") {
    auto specFile = scratch_dir() / "subsets.json";
    spit(specFile,
         "{\"N\": 2, \"M\": [2, 2],"
         " \"Aminus\": [[1, 1], [1, 1]],"
         " \"A\": [[1, 1], [1, 1]],"
         " \"Aplus\": [[1, 1], [1, 1]],"
         " \"subsets\": {"
         "  \"minus\": [[[2], [1]], [[1], [2]]],"
         "  \"mid\": [[[1], [2]], [[2], [1]]],"
         "  \"plus\": [[[2], [2]], [[1], [1]]]}}\n");
    RunResult r = run_cli("canonicalize --spec " + specFile.string());
    CHECK(r.status == 0);
    CHECK(r.out.find("\"maps\"") != std::string::npos);
    CHECK(r.out.find("\"minusMinus\"") != std::string::npos);
    CHECK(r.out.find("\"subsets\"") != std::string::npos);  // source keeps them
}

TEST_CASE("verify uniform prints the summary line") {
    RunResult r = run_cli("verify uniform --order 8");
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "ok=true checked=108 order=8");
}

TEST_CASE("verify powers on conditioned random triplets") {
    RunResult r = run_cli("verify powers --trials 25 --kmax 8 --seed 5");
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "ok=true checked=25 order=8");
}

TEST_CASE("verify families validates all five forms") {
    RunResult r = run_cli("verify families --trials 20 --kmax 6");
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "ok=true checked=5 order=6");
    CHECK(r.out.find("circulant: ok") != std::string::npos);
    CHECK(r.out.find("near-circulant: ok") != std::string::npos);
    CHECK(r.out.find("near-row-column-constant: ok") != std::string::npos);
}

TEST_CASE("verify zeta on a few random specs") {
    RunResult r = run_cli("verify zeta --count 3 --nmax 6 --seed 9");
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "ok=true checked=4 order=6");
}

TEST_CASE("verify reversal on a few random triplets") {
    RunResult r = run_cli("verify reversal --count 3 --nmax 6 --seed 11");
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "ok=true checked=3 order=6");
}

TEST_CASE("verify cubic sweeps every 0-1 triplet") {
    RunResult r = run_cli("verify cubic --order 8 --quick-order 6");
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "ok=true checked=4096 order=8");
}

TEST_CASE("classification output is stable across runs") {
    RunResult r1 = run_cli("classify --format tsv --slow-order 6");
    CHECK(r1.status == 0);
    CHECK(first_line(r1.out) ==
          "representative\tsize\tcirculant\trowColumnConstant\tswapTranspose\t"
          "outsideAllFamilies\tlisted");
    RunResult r2 = run_cli("classify --format tsv --slow-order 6");
    CHECK(r1.out == r2.out);
}
