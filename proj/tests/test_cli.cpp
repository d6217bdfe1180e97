#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "abspec/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream ifs(path, std::ios::binary);
    std::ostringstream oss;
    oss << ifs.rdbuf();
    return oss.str();
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/abspec_test_") + name;
}

int run(std::vector<std::string> args) { return abspec::cli::run(args); }

}  // namespace

TEST_CASE("spectrum CSV output is byte-stable and correct") {
    const auto p1 = tmp_path("spec1.csv");
    const auto p2 = tmp_path("spec2.csv");
    const std::vector<std::string> base = {"spectrum", "--alpha", "0.3", "--B", "1",
                                           "--xi", "0", "--eta", "0", "--zeta", "0",
                                           "--lambda-max", "8"};
    auto with_out = [&](const std::string& path) {
        auto v = base;
        v.push_back("-o");
        v.push_back(path);
        return v;
    };
    CHECK(run(with_out(p1)) == 0);
    CHECK(run(with_out(p2)) == 0);
    const auto s1 = slurp(p1);
    CHECK(s1 == slurp(p2));
    CHECK(s1.find("lambda,z,source,sectors,multiplicity\n") == 0);
    CHECK(s1.find("\n1,0,stable_landau") != std::string::npos);
    CHECK(s1.find("\n1.6,-0.3,critical_endpoint") != std::string::npos);
    CHECK(s1.find("7.6,") != std::string::npos);
    CHECK(s1.find("9.6,") == std::string::npos);  // above lambda-max
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("spectrum with bc=inf includes the pulled-down level") {
    const auto p = tmp_path("spec_inf.csv");
    CHECK(run({"spectrum", "--alpha", "0.3", "--B", "1", "--bc", "inf",
               "--lambda-max", "4", "-o", p}) == 0);
    const auto s = slurp(p);
    CHECK(s.find("\n-0.4,0.7,") != std::string::npos);
    std::remove(p.c_str());
}

TEST_CASE("conflicting parameter groups exit with a config error") {
    CHECK(run({"spectrum", "--alpha", "0.3", "--B", "1", "--xi", "1", "--u", "1",
               "--lambda-max", "8", "-o", "/dev/null"}) == 1);
    CHECK(run({"spectrum", "--alpha", "0.3", "--B", "1", "--lambda-max", "8",
               "-o", "/dev/null"}) == 1);
    CHECK(run({"spectrum", "--alpha", "1.7", "--B", "1", "--xi", "0",
               "--lambda-max", "8", "-o", "/dev/null"}) == 1);
}

TEST_CASE("spectrum JSON carries config, records, diagnostics") {
    const auto p = tmp_path("spec.json");
    CHECK(run({"spectrum", "--alpha", "0.3", "--B", "1", "--u", "0.4", "--v",
               "-0.2", "--w", "0.1,0.2", "--lambda-max", "6", "--format", "json",
               "-o", p}) == 0);
    const auto s = slurp(p);
    CHECK(s.find("\"config\"") != std::string::npos);
    CHECK(s.find("\"records\"") != std::string::npos);
    CHECK(s.find("\"diagnostics\"") != std::string::npos);
    CHECK(s.find("\"multiplicity_truncated\"") != std::string::npos);
    std::remove(p.c_str());
}

TEST_CASE("sweep with two steps emits both columns") {
    const auto p = tmp_path("sweep2.csv");
    CHECK(run({"sweep", "--alpha", "0.3", "--B", "1", "--dir", "0.95,0.25,0.25",
               "--t", "-1:1:2", "-o", p}) == 0);
    const auto s = slurp(p);
    CHECK(s.find("t,branch_id,lambda\n") == 0);
    CHECK(s.find("\n-1,") != std::string::npos);
    CHECK(s.find("\n1,") != std::string::npos);
    std::remove(p.c_str());
}

TEST_CASE("sweep SVG is self-contained") {
    const auto p = tmp_path("sweep.svg");
    CHECK(run({"sweep", "--alpha", "0.3", "--B", "1", "--dir", "0.95,-0.25,0",
               "--t", "-2:2:41", "--format", "svg", "-o", p}) == 0);
    const auto s = slurp(p);
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(s.find("stroke-dasharray") != std::string::npos);  // stable levels
    CHECK(s.find("<polyline") != std::string::npos);
    CHECK(s.find("</svg>") != std::string::npos);
    CHECK(s.find("href") == std::string::npos);  // no external assets
    std::remove(p.c_str());
}

TEST_CASE("sweep serial flag reproduces the parallel output") {
    const auto p1 = tmp_path("sw_par.csv");
    const auto p2 = tmp_path("sw_ser.csv");
    CHECK(run({"sweep", "--alpha", "0.3", "--B", "1", "--dir", "0.95,0.25,0.25",
               "--t", "-2:2:41", "-o", p1}) == 0);
    CHECK(run({"sweep", "--alpha", "0.3", "--B", "1", "--dir", "0.95,0.25,0.25",
               "--t", "-2:2:41", "--serial", "-o", p2}) == 0);
    CHECK(slurp(p1) == slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("verify digamma suite passes and reports") {
    const auto p = tmp_path("verify.txt");
    CHECK(run({"verify", "digamma", "-o", p}) == 0);
    const auto s = slurp(p);
    CHECK(s.find("[PASS] digamma/identity") != std::string::npos);
    std::remove(p.c_str());
}

TEST_CASE("verify rejects unknown suites") {
    CHECK(run({"verify", "nonsense", "-o", "/dev/null"}) == 1);
}

TEST_CASE("green command emits both evaluations") {
    const auto p = tmp_path("green.csv");
    CHECK(run({"green", "--alpha", "0.3", "--B", "1", "--m", "0", "--z", "0",
               "--r1", "0.7", "--r2", "1.6", "--terms", "500", "-o", p}) == 0);
    const auto s = slurp(p);
    CHECK(s.find("quantity,re,im\n") == 0);
    CHECK(s.find("series,") != std::string::npos);
    CHECK(s.find("closed,") != std::string::npos);
    std::remove(p.c_str());
}
