#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "feuler/urational.hpp"

// End-to-end checks against the built command-line binary.
#ifndef FEULER_CLI_PATH
#define FEULER_CLI_PATH "feuler"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& cache_dir) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "feuler_cli_test";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = "FEULER_CACHE='" + cache_dir + "' " + FEULER_CLI_PATH + " " + args + " > '" +
                      out.string() + "' 2> '" + err.string() + "'";
    int rc = std::system(cmd.c_str());
    return {WEXITSTATUS(rc), slurp(out), slurp(err)};
}

fs::path fresh_cache() {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / ("feuler_cache_" + std::to_string(counter++));
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("table renders the first rows") {
    fs::path cache = fresh_cache();
    RunResult r = run_cli("table --nmax 2 --r 1", cache.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("H(0,1) = (1*u^0) / (1*u^0)") != std::string::npos);
    CHECK(r.out.find("H(1,1) = (1*u^0) / (1*u^1 + -1*u^0)") != std::string::npos);
    CHECK(r.out.find("H(2,1) = (1*u^1 + 1*u^0) / (1*u^2 + -2*u^1 + 1*u^0)") != std::string::npos);
}

TEST_CASE("table evaluates at u = -1 to the classical Euler numbers") {
    fs::path cache = fresh_cache();
    RunResult r = run_cli("table --nmax 3 --r 1 --at -1", cache.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "H(0,1) = 1\nH(1,1) = -1/2\nH(2,1) = 0\nH(3,1) = 1/4\n");
    RunResult single = run_cli("table --nmax 0 --r 5", cache.string());
    CHECK(single.out.find("H(0,5) = (1*u^0) / (1*u^0)") != std::string::npos);
}

TEST_CASE("cache transparency: warm, cold and corrupt caches agree") {
    fs::path cache = fresh_cache();
    RunResult cold = run_cli("table --nmax 4 --r 2 --format json", cache.string());
    CHECK(cold.exit_code == 0);
    RunResult warm = run_cli("table --nmax 4 --r 2 --format json", cache.string());
    CHECK(warm.exit_code == 0);
    CHECK(cold.out == warm.out);
    // cached values are parseable canonical renderings
    CHECK(fs::exists(cache / "h_3_2.json"));
    // corrupt one entry: the command must warn, recompute and still be right
    {
        std::ofstream os(cache / "h_3_2.json");
        os << "{ not json";
    }
    RunResult fixed = run_cli("table --nmax 4 --r 2 --format json", cache.string());
    CHECK(fixed.exit_code == 0);
    CHECK(fixed.out == cold.out);
    CHECK(fixed.err.find("warning") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    fs::path cache = fresh_cache();
    RunResult a = run_cli("check reflection --nmax 4 --rmax 2", cache.string());
    RunResult b = run_cli("check reflection --nmax 4 --rmax 2", cache.string());
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"schema\": 1") != std::string::npos);
    CHECK(a.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("check kummer passes on the reference instance") {
    fs::path cache = fresh_cache();
    RunResult r = run_cli("check kummer --p 5 --r 1 --n 3 --m 23 --u 2 --N 0", cache.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("csv table output") {
    fs::path cache = fresh_cache();
    RunResult r = run_cli("table --nmax 1 --r 1 --format csv", cache.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,r,value\n0,1,(1*u^0) / (1*u^0)\n1,1,(1*u^0) / (1*u^1 + -1*u^0)\n");
}

TEST_CASE("zeta subcommand emits value and tail bound") {
    fs::path cache = fresh_cache();
    RunResult r = run_cli("zeta --s 2 --u 2 --r 1 --x 1 --M 60", cache.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"value\": \"1.164481052") != std::string::npos);
    CHECK(r.out.find("tail_bound") != std::string::npos);
}

TEST_CASE("padic subcommand emits residue, precision and digits") {
    fs::path cache = fresh_cache();
    RunResult r = run_cli("padic --op moment --p 5 --u 2 --n 1 --N 3", cache.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"p\": 5") != std::string::npos);
    CHECK(r.out.find("\"precision\": 8") != std::string::npos);
    CHECK(r.out.find("\"digits\"") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
    fs::path cache = fresh_cache();
    fs::path target = fs::temp_directory_path() / "feuler_out_test.json";
    fs::remove(target);
    RunResult r = run_cli("table --nmax 1 --r 1 --format json --out '" + target.string() + "'",
                          cache.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::string written = slurp(target);
    CHECK(written.find("\"H(1,1)\"") != std::string::npos);
    fs::remove(target);
}

TEST_CASE("usage errors are rejected with nonzero exit") {
    fs::path cache = fresh_cache();
    CHECK(run_cli("check no-such-suite", cache.string()).exit_code != 0);
    CHECK(run_cli("table", cache.string()).exit_code != 0);          // missing --nmax
    CHECK(run_cli("table --nmax 2 --format bogus", cache.string()).exit_code != 0);
    CHECK(run_cli("padic --op moment --p 5 --u 6 --n 1 --N 2", cache.string()).exit_code != 0); // u ≡ 1
}
