#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "seaidx/cli.hpp"
#include "seaidx/io.hpp"
#include "seaidx/summary_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "seaidx");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = seaidx::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("seaidx_cli_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("gen, summarize, index and query pipeline") {
    TempDir dir;
    const auto base = dir / "base";
    const auto queries = dir / "queries";
    const auto paa = dir / "paa";

    auto r = run({"gen", "--kind", "randwalk", "--n", "1000", "--m", "64", "--seed", "3", "--out", base});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("gen kind=randwalk n=1000 m=64") != std::string::npos);
    REQUIRE(run({"gen", "--n", "10", "--m", "64", "--seed", "3", "--query-stream", "--out", queries}).code == 0);

    r = run({"summarize", "--dataset", base, "--kind", "paa", "--l", "8", "--out", paa});
    REQUIRE(r.code == 0);
    CHECK(fs::exists(paa + ".sax"));
    CHECK(fs::exists(paa + ".sax.meta"));

    r = run({"index", "--summary", paa, "--h", "50"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("leaves=", 0) == 0);

    r = run({"query", "--dataset", base, "--summary", paa, "--queries", queries, "--budget", "50,1000", "--h", "50",
             "--exact"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("qid=0 budget=50 bsf=") != std::string::npos);
    CHECK(r.out.find("metric=tightness value=1") != std::string::npos);  // budget n
    CHECK(r.out.find("metric=exact_examined") != std::string::npos);

    r = run({"sample", "--dataset", base, "--strategy", "seasam", "--n-prime", "100", "--out", dir / "s"});
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir / "s.idx"));

    r = run({"eval", "--metric", "avg-diff", "--dataset", base, "--summary", paa, "--sample", dir / "s"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("metric=avg_distance_diff value=", 0) == 0);

    r = run({"stats", "--dataset", base, "--summary", paa});
    CHECK(r.code == 0);
    CHECK(r.out.find("dataset n=1000 m=64") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
    TempDir dir;
    REQUIRE(run({"gen", "--kind", "f10", "--n", "200", "--m", "64", "--seed", "9", "--out", dir / "a"}).code == 0);
    REQUIRE(run({"gen", "--kind", "f10", "--n", "200", "--m", "64", "--seed", "9", "--out", dir / "b"}).code == 0);
    CHECK(slurp(dir / "a.bin") == slurp(dir / "b.bin"));
    REQUIRE(run({"summarize", "--dataset", dir / "a", "--kind", "dft", "--out", dir / "sa"}).code == 0);
    REQUIRE(run({"summarize", "--dataset", dir / "b", "--kind", "dft", "--out", dir / "sb"}).code == 0);
    CHECK(slurp(dir / "sa.bin") == slurp(dir / "sb.bin"));
    CHECK(slurp(dir / "sa.sax") == slurp(dir / "sb.sax"));
}

TEST_CASE("external embeddings") {
    TempDir dir;
    REQUIRE(run({"gen", "--n", "5", "--m", "8", "--seed", "1", "--out", dir / "d"}).code == 0);
    const fs::path fixtures = SEAIDX_TEST_DATA_DIR;

    // trainer_dea holds 5 rows: matches.
    auto r = run({"summarize", "--dataset", dir / "d", "--kind", "dea", "--embedding",
                  (fixtures / "trainer_dea").string(), "--l", "4", "--out", dir / "e"});
    CHECK(r.code == 0);

    REQUIRE(run({"gen", "--n", "6", "--m", "8", "--seed", "1", "--out", dir / "d6"}).code == 0);
    r = run({"summarize", "--dataset", dir / "d6", "--kind", "dea", "--embedding",
             (fixtures / "trainer_dea").string(), "--out", dir / "e6"});
    CHECK(r.code == 1);
    CHECK(r.err.find("SizeMismatch") != std::string::npos);

    r = run({"summarize", "--dataset", dir / "d", "--kind", "dea", "--out", dir / "e7"});
    CHECK(r.code == 2);
}

TEST_CASE("usage and data errors map to exit codes") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"gen"}).code == 2);  // --out is required
    CHECK(run({"gen", "--kind", "sine", "--out", "x"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"eval", "--metric", "leaf-coverage", "--summary", "x"}).code == 2);
    CHECK(run({"index", "--summary", "/nonexistent/summary"}).code == 1);
}

TEST_CASE("chi metric from the command line") {
    auto r = run({"eval", "--metric", "chi", "--lengths", "16", "--pairs", "2000", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("metric=chi_mean_analytic value=5.569") != std::string::npos);
}
