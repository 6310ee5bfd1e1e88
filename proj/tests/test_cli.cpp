#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef POWERSUM_BIN
#define POWERSUM_BIN "./powersum"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(POWERSUM_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/powersum_test_") + name;
    std::ofstream f(path);
    f << text;
    return path;
}

const char* kPhi =
    R"({"alphas":[{"minpoly":[-1,-1,1],"root":{"re":["1/1","2/1"],"im":["0/1","0/1"]}}]})";

}  // namespace

TEST_CASE("decide exit codes and determinism") {
    std::string phi = write_temp("phi.json", kPhi);
    auto r1 = run("decide " + phi);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("exists") != std::string::npos);
    CHECK(r1.output.find("0.618033988") != std::string::npos);
    auto r2 = run("decide " + phi);
    CHECK(r2.output == r1.output);  // byte-identical

    std::string th = write_temp("three_halves.json", R"({"alphas":["3/2"]})");
    auto r3 = run("decide " + th);
    CHECK(r3.exit_code == 1);
    CHECK(r3.output.find("not_exists") != std::string::npos);
    CHECK(r3.output.find("non_integral") != std::string::npos);

    std::string s2 = write_temp(
        "sqrt2.json",
        R"({"alphas":[{"minpoly":[-2,0,1],"root":{"re":["1/1","2/1"],"im":["0/1","0/1"]}}]})");
    auto r4 = run("decide " + s2);
    CHECK(r4.exit_code == 0);
    CHECK(r4.output.find("exponent m: 2") != std::string::npos);

    auto r5 = run("decide /nonexistent.json");
    CHECK(r5.exit_code == 2);
    std::string bad = write_temp("bad.json", "{not json");
    CHECK(run("decide " + bad).exit_code == 2);
}

TEST_CASE("classify") {
    std::string pair = write_temp("pair.json", R"(["2","-2"])");
    auto r = run("classify " + pair);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("degenerate") != std::string::npos);
    CHECK(r.output.find("order 2") != std::string::npos);

    std::string phi = write_temp("phi.json", kPhi);
    auto r2 = run("classify " + phi);
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("pisot number: true") != std::string::npos);

    std::string th = write_temp("three_halves.json", R"(["3/2"])");
    auto r3 = run("classify " + th);
    CHECK(r3.output.find("pseudo-pisot: false") != std::string::npos);
    CHECK(r3.output.find("3/2") != std::string::npos);
}

TEST_CASE("trajectory with csv") {
    std::string phi = write_temp("phi.json", kPhi);
    std::string csv = "/tmp/powersum_test_scan.csv";
    auto r = run("trajectory " + phi + " --from 1 --to 12 --theta 0.7 --csv " + csv);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("members") != std::string::npos);
    std::ifstream f(csv);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "n,p,dist_lo,dist_hi,decided,theta_power,in_M");
    int rows = 0;
    std::string line;
    while (std::getline(f, line)) ++rows;
    CHECK(rows == 12);
}

TEST_CASE("decompose") {
    std::string rec = write_temp(
        "halfphi.json",
        R"({"terms":[{"coeffs":["1/2"],"alpha":{"minpoly":[-1,-1,1],"root":{"re":["1/1","2/1"],"im":["0/1","0/1"]}}}]})");
    auto r = run("decompose " + rec + " --theta 7/10 --scan-limit 60 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"certified\": true") != std::string::npos);
    CHECK(r.output.find("\"threshold\": 4") != std::string::npos);

    std::string bad = write_temp("mahler.json", R"({"terms":[{"coeffs":["1"],"alpha":"3/2"}]})");
    auto r2 = run("decompose " + bad + " --theta 9/10 --scan-limit 40");
    CHECK(r2.exit_code == 1);
    CHECK(r2.output.find("certified: false") != std::string::npos);

    // theta at or below theta0 is a usage error
    auto r3 = run("decompose " + rec + " --theta 1/2 --scan-limit 60");
    CHECK(r3.exit_code == 2);
}

TEST_CASE("waring and height") {
    auto r = run("waring --kmax 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("19") != std::string::npos);
    CHECK(r.output.find("1/16") != std::string::npos);

    std::string th = write_temp("th2.json", R"({"rational":"3/2"})");
    auto r2 = run("height " + th);
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("1.0986122886") != std::string::npos);
}
