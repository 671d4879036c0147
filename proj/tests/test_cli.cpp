#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "treenergy/canonical.hpp"
#include "treenergy/energy.hpp"
#include "treenergy/tree.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TREENERGY_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("energy of P2 by both methods") {
    const auto r = run_cli("energy --path 2 --method both --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["results"].size() == 2);
    for (const auto& res : j["results"]) {
        CHECK(std::abs(res["value"].get<double>() - 2.0) < 1e-10);
    }
    CHECK(j["cross_method_delta"].get<double>() < 1e-10);
}

TEST_CASE("energy of Ta(3,3): methods agree below 1e-8") {
    const auto r = run_cli("energy --family ta --delta 3 --t 3 --method both --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["order"].get<int>() == 11);
    CHECK(j["cross_method_delta"].get<double>() < 1e-8);
}

TEST_CASE("energy for tc takes the order") {
    const auto r = run_cli("energy --family tc --delta 3 --n 8 --method eigen");
    CHECK(r.exit_code == 0);
    const auto missing = run_cli("energy --family tc --delta 3");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("bad edge lists exit 2 with a line-numbered message") {
    const std::string path = "cli_bad_edgelist.txt";
    std::ofstream(path) << "0 1\n0 1\n";
    const auto r = run_cli("energy --edgelist " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("line 2") != std::string::npos);
    std::remove(path.c_str());

    const auto missing_file = run_cli("energy --edgelist does_not_exist.txt");
    CHECK(missing_file.exit_code == 2);
}

TEST_CASE("compare sweep across the Delta=5 boundary") {
    const auto r = run_cli("compare --delta 5 --t-range 85:95 --format csv");
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 12);  // header + 11
    CHECK(rows[0] == "delta,t,winner,margin,margin_error,decisive");
    for (size_t i = 1; i < rows.size(); ++i) {
        const int t = 85 + static_cast<int>(i) - 1;
        const std::string expect = (t % 2 == 1 && t <= 89) ? "Ta" : "Tb";
        CHECK(rows[i].find("5," + std::to_string(t) + "," + expect + ",") == 0);
        CHECK(rows[i].find("true") != std::string::npos);
    }
}

TEST_CASE("compare single cells and domain errors") {
    CHECK(run_cli("compare --delta 8 --t 3 --format csv").out.find("8,3,Tb") !=
          std::string::npos);
    CHECK(run_cli("compare --delta 2 --t 5").exit_code == 2);
    CHECK(run_cli("compare --delta 5 --t 2").exit_code == 2);
    CHECK(run_cli("compare --delta 5").exit_code == 2);  // no --t
}

TEST_CASE("table1 --check stays within the print tolerance") {
    const auto r = run_cli("table1 --check --format csv");
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 61);
    CHECK(rows[0] == "delta,f_value,f_reference,abs_diff");
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto last_comma = rows[i].rfind(',');
        const double diff = std::stod(rows[i].substr(last_comma + 1));
        CHECK(diff <= 5e-5);
    }
}

TEST_CASE("table1 fixture file matches the compiled-in reference") {
    std::ifstream csv(std::string(TREENERGY_DATA_DIR) + "/table1_reference.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "delta,f_value");
    const auto r = run_cli("table1 --check --format json");
    const auto j = nlohmann::json::parse(r.out);
    size_t i = 0;
    std::string line;
    while (std::getline(csv, line)) {
        REQUIRE(i < j.size());
        const auto comma = line.find(',');
        CHECK(j[i]["delta"].get<int>() == std::stoi(line.substr(0, comma)));
        CHECK(j[i]["f_reference"].get<double>() ==
              doctest::Approx(std::stod(line.substr(comma + 1))).epsilon(1e-12));
        ++i;
    }
    CHECK(i == 60);
}

TEST_CASE("verify subcommand exit codes") {
    CHECK(run_cli("verify --suite table1").exit_code == 0);
    CHECK(run_cli("verify --suite no-such").exit_code == 2);
    CHECK(run_cli("verify --suite theorem11").exit_code == 0);  // default cap
}

TEST_CASE("enumerate with ranking puts Ta(3,3) first for n=11, delta=3") {
    const auto r = run_cli("enumerate --n 11 --delta 3 --rank --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(!j.empty());
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j[0]["edges"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    const treenergy::Tree first(j[0]["order"].get<int>(), std::move(edges));
    CHECK(treenergy::isomorphic(first, treenergy::build_ta({3, 3})));
    // energies sorted descending
    double prev = 1e300;
    for (const auto& item : j) {
        const double e = item["energy"].get<double>();
        CHECK(e <= prev + 1e-12);
        prev = e;
    }
}

TEST_CASE("byte-identical output across identical invocations") {
    const std::string args = "compare --delta 6 --t-range 3:9 --format csv";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const auto t1 = run_cli("table1 --delta-range 8:12");
    const auto t2 = run_cli("table1 --delta-range 8:12");
    CHECK(t1.out == t2.out);
}

TEST_CASE("verdict json round-trips through the documented schema") {
    const auto r = run_cli("compare --delta 4 --t 4 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["delta"] == 4);
    CHECK(j[0]["t"] == 4);
    CHECK(j[0]["winner"] == "Tb");
    CHECK(j[0]["decisive"] == true);
    CHECK(j[0]["margin"].get<double>() < 0);
    CHECK(j[0]["margin_error"].get<double>() > 0);
    // round trip: serialize and parse again
    const auto dumped = j.dump();
    CHECK(nlohmann::json::parse(dumped) == j);
}

TEST_CASE("ENERGY_TOL environment override") {
    const std::string base = std::string(TREENERGY_CLI_PATH);
    const std::string cmd = "ENERGY_TOL=1e-6 " + base + " energy --path 30 --method coulson --format json 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::string out;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    const auto j = nlohmann::json::parse(out);
    // loose tolerance shows up as a bigger reported error bound
    CHECK(j["results"][0]["abs_error_estimate"].get<double>() > 1e-9);
    CHECK(std::abs(j["results"][0]["value"].get<double>() -
                   treenergy::path_energy_closed(30)) < 1e-6);
}

TEST_SUITE_END();
