// End-to-end tests of the installed command-line interface, driven through
// popen on the freshly built binary (path injected by the build).

#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

#include <json.hpp>

#ifndef OPQ_CLI_PATH
#error "OPQ_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_command(const std::string& cmd) {
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        res.output.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
    return run_command(std::string("\"") + OPQ_CLI_PATH + "\" " + args +
                       (merge_stderr ? " 2>&1" : " 2>/dev/null"));
}

RunResult run_env(const std::string& env, const std::string& args) {
    return run_command(env + " \"" + OPQ_CLI_PATH + "\" " + args +
                       " 2>/dev/null");
}

std::string write_temp(const char* name, const std::string& body) {
    const std::string path = std::string("/tmp/") + name;
    std::ofstream f(path);
    f << body;
    return path;
}

std::string strip_seconds(std::string s) {
    const auto pos = s.find("\"seconds\"");
    return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

TEST_CASE("gegenbauer subcommand emits the documented JSON") {
    auto r = run("gegenbauer --lambda 2 --n 100 --json");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["n"] == 100);
    CHECK(doc["N"] == 102);
    CHECK(doc["bound"] == 0.0);
    CHECK(doc["method"] == "gegenbauer-terminating");
    CHECK(std::abs(doc["value"].get<double>() - (-2.0439840139829924449)) <
          1e-12);
    CHECK(doc["seconds"].get<double>() >= 0.0);

    // JSON is also the default format
    auto r2 = run("gegenbauer --lambda 2 --n 100");
    CHECK(strip_seconds(r2.output) == strip_seconds(r.output));
}

TEST_CASE("CSV output carries a header and one data row") {
    auto r = run("gegenbauer --lambda 2 --n 100 --csv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.rfind("n,value,N,bound,method,seconds\n", 0) == 0);
    const auto line = r.output.substr(r.output.find('\n') + 1);
    CHECK(line.rfind("100,", 0) == 0);
    CHECK(line.find("gegenbauer-terminating") != std::string::npos);
    // exactly two lines
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 2);
}

TEST_CASE("bits conversion divides entropy fields by ln 2") {
    auto nats = nlohmann::json::parse(
        run("gegenbauer --lambda 1.5 --n 12 --eps 1e-8").output);
    auto bits = nlohmann::json::parse(
        run("gegenbauer --lambda 1.5 --n 12 --eps 1e-8 --bits").output);
    const double scale = std::numbers::ln2;
    CHECK(std::abs(bits["value"].get<double>() * scale -
                   nats["value"].get<double>()) < 1e-14);
    CHECK(std::abs(bits["bound"].get<double>() * scale -
                   nats["bound"].get<double>()) < 1e-20);
    CHECK(nats["N"] == bits["N"]);
}

TEST_CASE("precision control: flag and environment") {
    auto r5 = run("gegenbauer --lambda 2 --n 100 --precision 5");
    CHECK(r5.output.find("-2.044") != std::string::npos);
    CHECK(r5.output.find("-2.0439") == std::string::npos);

    auto renv = run_env("OPQ_PRECISION=5", "gegenbauer --lambda 2 --n 100");
    CHECK(renv.output.find("-2.044") != std::string::npos);
    CHECK(renv.output.find("-2.0439") == std::string::npos);

    // explicit flag beats the environment
    auto rboth =
        run_env("OPQ_PRECISION=3", "gegenbauer --lambda 2 --n 100 --precision 17");
    CHECK(rboth.output.find("-2.04398401398299") != std::string::npos);

    auto rbad = run_env("OPQ_PRECISION=banana", "gegenbauer --lambda 2 --n 1");
    CHECK(rbad.exit_code == 2);
    auto rrange = run("gegenbauer --lambda 2 --n 1 --precision 40", true);
    CHECK(rrange.exit_code == 2);
    CHECK(rrange.output.find("--precision") != std::string::npos);
}

TEST_CASE("spherical subcommand") {
    auto r = run("spherical --l 0 --m 0");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(std::abs(doc["S"].get<double>() -
                   std::log(4.0 * std::acos(-1.0))) < 1e-12);
    CHECK(doc["l"] == 0);
    CHECK(doc["m"] == 0);

    auto prof = run("spherical --l 3 --profile");
    auto pdoc = nlohmann::json::parse(prof.output);
    REQUIRE(pdoc["profile"].size() == 7);
    CHECK(pdoc["profile"][0]["m"] == -3);
    CHECK(pdoc["profile"][6]["m"] == 3);
    CHECK(pdoc["profile"][0]["S"] == pdoc["profile"][6]["S"]);

    auto csv = run("spherical --l 3 --profile --csv");
    REQUIRE(csv.output.rfind("m,S\n", 0) == 0);
    CHECK(std::count(csv.output.begin(), csv.output.end(), '\n') == 8);
    CHECK(csv.output.find("\n-3,") != std::string::npos);

    CHECK(run("spherical --l 3 --m 1 --profile", true).exit_code == 2);
    CHECK(run("spherical --l 3", true).exit_code == 2);
    CHECK(run("spherical --l 3 --m 4", true).exit_code == 2);
    CHECK(run("spherical --l -2 --m 0", true).exit_code == 2);
}

TEST_CASE("custom subcommand evaluates coefficient files") {
    // second-kind coefficients: entropy at n = 5 is exactly -5/6
    std::string small = "{\"a\": [";
    for (int i = 0; i < 32; ++i) small += (i ? ", 0.5" : "0.5");
    small += "]}";
    const auto path = write_temp("opq_cli_u.json", small);

    auto r = run("custom --coeffs " + path + " --n 5 --trunc 20");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(std::abs(doc["value"].get<double>() - (-5.0 / 6.0)) < 1e-12);
    CHECK(doc["method"] == "generic");
    CHECK(doc["bound"].is_null());

    // exactly one of --eps / --trunc
    CHECK(run("custom --coeffs " + path + " --n 5", true).exit_code == 2);
    CHECK(run("custom --coeffs " + path + " --n 5 --eps 1e-3 --trunc 9", true)
              .exit_code == 2);

    // --eps path with plenty of coefficients
    std::string big = "{\"a\": [";
    for (int i = 0; i < 400; ++i) big += (i ? ", 0.5" : "0.5");
    big += "]}";
    const auto bigpath = write_temp("opq_cli_u_long.json", big);
    auto reps = run("custom --coeffs " + bigpath + " --n 5 --eps 2.0");
    REQUIRE(reps.exit_code == 0);
    auto epsdoc = nlohmann::json::parse(reps.output);
    CHECK(std::abs(epsdoc["value"].get<double>() - (-5.0 / 6.0)) < 1e-10);
    CHECK(epsdoc["bound"].get<double>() <= 2.0);

    // an unreachable certificate target is a numerical failure: exit 1
    auto rfail = run("custom --coeffs " + bigpath + " --n 5 --eps 1e-9", true);
    CHECK(rfail.exit_code == 1);
    CHECK(rfail.output.find("error:") != std::string::npos);
}

TEST_CASE("malformed coefficient files carry the JSON path, exit 2") {
    const auto bad = write_temp("opq_cli_bad.json", "{\"a\": [0.5, -0.1]}");
    auto r = run("custom --coeffs " + bad + " --n 1 --trunc 4", true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("/a/1") != std::string::npos);

    const auto junk = write_temp("opq_cli_junk.json", "not json at all");
    auto r2 = run("custom --coeffs " + junk + " --n 1 --trunc 4", true);
    CHECK(r2.exit_code == 2);
    CHECK(r2.output.find("not valid JSON") != std::string::npos);

    auto r3 = run("custom --coeffs /nonexistent/x.json --n 1 --trunc 4", true);
    CHECK(r3.exit_code == 2);
    CHECK(r3.output.find("cannot open") != std::string::npos);
}

TEST_CASE("moments subcommand") {
    auto r = run("moments --lambda 2 --n 4 --trunc 12 --json");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["n"] == 4);
    CHECK(doc["N"] == 12);
    REQUIRE(doc["c"].size() == 13);
    REQUIRE(doc["m"].size() == 13);
    CHECK(doc["c"][0] == 1.0);
    CHECK(doc["m"][0] == 1.0);
    for (std::size_t k = 1; k <= 12; k += 2) {
        CHECK(doc["c"][k] == 0.0);
        CHECK(doc["m"][k] == 0.0);
    }

    auto csv = run("moments --lambda 2 --n 4 --trunc 12 --csv");
    REQUIRE(csv.output.rfind("k,c,m\n", 0) == 0);
    CHECK(std::count(csv.output.begin(), csv.output.end(), '\n') == 14);

    CHECK(run("moments --n 4 --trunc 12", true).exit_code == 2);
    CHECK(run("moments --lambda 2 --n 4 --trunc 0", true).exit_code == 2);
}

TEST_CASE("bench subcommand emits the comparison table") {
    auto r = run("bench --lambdas 2 --ns 10 --methods series,quad --reps 1");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.rfind("lambda,n,method,value,abs_error,seconds\n", 0) == 0);
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 3);
    CHECK(r.output.find("\n2,10,series,") != std::string::npos);
    CHECK(r.output.find("\n2,10,quad,") != std::string::npos);

    auto rfile = run("bench --lambdas 2 --ns 5 --methods series --reps 1 --csv "
                     "/tmp/opq_bench_table.csv");
    REQUIRE(rfile.exit_code == 0);
    CHECK(rfile.output.empty());
    std::ifstream f("/tmp/opq_bench_table.csv");
    std::string header;
    std::getline(f, header);
    CHECK(header == "lambda,n,method,value,abs_error,seconds");

    CHECK(run("bench --lambdas 2 --ns 5 --methods warp --reps 1", true)
              .exit_code == 2);
    CHECK(run("bench --lambdas nope --ns 5 --reps 1", true).exit_code == 2);
}

TEST_CASE("argument errors and version") {
    CHECK(run("gegenbauer --n 4", true).exit_code == 2);          // missing lambda
    CHECK(run("gegenbauer --lambda -0.6 --n 4", true).exit_code == 2);
    CHECK(run("gegenbauer --lambda 2 --n 4 --eps 1e-6 --trunc 9", true)
              .exit_code == 2);
    CHECK(run("gegenbauer --lambda 2 --n 4 --json --csv", true).exit_code == 2);
    CHECK(run("frobnicate", true).exit_code == 2);
    CHECK(run("", true).exit_code == 2);

    auto v = run("--version");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("1.0.0") != std::string::npos);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("byte-identical determinism, timing field aside") {
    const std::string args = "gegenbauer --lambda 2.5 --n 40 --eps 1e-10";
    auto a = run(args);
    auto b = run(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(strip_seconds(a.output) == strip_seconds(b.output));
    CHECK(a.output.find("\"method\": \"gegenbauer-bounded\"") !=
          std::string::npos);
}
