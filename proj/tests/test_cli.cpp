#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

// Integration tests that drive the command line tool as a subprocess. The
// binary location and the golden data directory are injected by the build.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TETRA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Parses the first JSON value embedded in mixed stdout (report followed by
// human-readable summary lines).
nlohmann::json first_json(const std::string& out) {
    const auto start = out.find('{');
    REQUIRE(start != std::string::npos);
    std::istringstream is(out.substr(start));
    nlohmann::json j;
    is >> j;
    return j;
}

std::string golden(const std::string& name) {
    return std::string(TETRA_GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("verify command exits zero and writes a passing certificate") {
    const RunResult r = run_cli("verify qosc --cutoff 2 --out cli_cert_a.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ALL PASSED") != std::string::npos);

    const nlohmann::json cert = nlohmann::json::parse(slurp("cli_cert_a.json"));
    CHECK(cert.at("schema_version").get<int>() == 1);
    CHECK(cert.at("tool").get<std::string>() == "tetra");
    CHECK(cert.at("all_pass").get<bool>() == true);
    CHECK(cert.at("checks").is_array());
    REQUIRE(cert.at("checks").size() == 1);
    CHECK(cert.at("checks")[0].at("pass").get<bool>() == true);
    CHECK(cert.at("content_hash").get<std::string>().rfind("fnv1a:", 0) == 0);
    CHECK(cert.at("timestamp").contains("iso"));
    CHECK(cert.at("timestamp").contains("wall_clock_seconds"));
}

TEST_CASE("identical configurations yield identical certificates modulo timestamp") {
    const RunResult a = run_cli("verify qosc --cutoff 2 --out cli_cert_b.json");
    const RunResult b = run_cli("verify qosc --cutoff 2 --out cli_cert_c.json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);

    nlohmann::json ca = nlohmann::json::parse(slurp("cli_cert_b.json"));
    nlohmann::json cb = nlohmann::json::parse(slurp("cli_cert_c.json"));
    REQUIRE(ca.contains("timestamp"));
    REQUIRE(cb.contains("timestamp"));
    CHECK(ca.at("content_hash") == cb.at("content_hash"));
    ca.erase("timestamp");
    cb.erase("timestamp");
    CHECK(ca.dump() == cb.dump());
}

TEST_CASE("usage and configuration errors exit with code two") {
    CHECK(run_cli("verify bogus").exit_code == 2);
    CHECK(run_cli("verify qosc --no-such-flag").exit_code == 2);
    // The product route needs Im(b^2) > 0; the default b sits on the unit
    // circle, so this is a configuration error, not a verified failure.
    CHECK(run_cli("dilog check --identity product-route --out \"\"").exit_code == 2);
}

TEST_CASE("verified failures exit with code one") {
    const RunResult r =
        run_cli("dilog check --identity difference --samples 2 --tol 1e-30 --out \"\"");
    CHECK(r.exit_code == 1);
    const nlohmann::json rep = first_json(r.out);
    CHECK(rep.at("pass").get<bool>() == false);
}

TEST_CASE("dilog check prints a machine readable report") {
    const RunResult r = run_cli("dilog check --identity difference --samples 3 --out \"\"");
    CHECK(r.exit_code == 0);
    const nlohmann::json rep = first_json(r.out);
    CHECK(rep.at("identity").get<std::string>() == "difference");
    CHECK(rep.at("samples").is_array());
    CHECK(rep.at("samples").size() == 3);
    CHECK(rep.at("pass").get<bool>() == true);
    CHECK(rep.at("max_residual").get<double>() < 1e-10);
}

TEST_CASE("generated transfer matrix files match the golden copies") {
    const RunResult r = run_cli(
        "gen rmatrix --s 1 --t 1 --n 1 --orders 0..2 "
        "--json cli_rm.json --csv cli_rm.csv --out \"\"");
    REQUIRE(r.exit_code == 0);
    CHECK(slurp("cli_rm.json") == slurp(golden("rmatrix_s1_t1_n1.json")));
    CHECK(slurp("cli_rm.csv") == slurp(golden("rmatrix_s1_t1_n1.csv")));

    const RunResult r2 = run_cli(
        "gen rmatrix --s 2 --t 1 --n 1 --orders 0..2 --json cli_rm2.json --out \"\"");
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp("cli_rm2.json") == slurp(golden("rmatrix_s2_t1_n1.json")));
}

TEST_CASE("golden data pins the known matrix elements") {
    const nlohmann::json d = nlohmann::json::parse(slurp(golden("rmatrix_s1_t1_n1.json")));

    auto coeff = [&](int z_order, const std::vector<int>& in, const std::vector<int>& out) {
        for (const auto& e : d.at("S")) {
            if (e.at("z_order").get<int>() == z_order &&
                e.at("in_state").get<std::vector<int>>() == in &&
                e.at("out_state").get<std::vector<int>>() == out)
                return e.at("coeff").get<std::string>();
        }
        return std::string();
    };

    CHECK(coeff(0, {0, 0}, {0, 0}) == "(1)/(1)");
    CHECK(coeff(1, {0, 0}, {0, 0}) == "(1 + u^2)/(1 + -u^2)");

    // The even series has no odd blocks at all.
    const nlohmann::json d2 = nlohmann::json::parse(slurp(golden("rmatrix_s2_t1_n1.json")));
    for (const auto& e : d2.at("S")) CHECK(e.at("z_order").get<int>() % 2 == 0);
    CHECK(d2.at("S").size() > 0);
}
