// drives the installed binary end to end: exit codes, CSV shapes, JSON
// reports, and byte-stable reruns
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#ifndef WQWALK_CLI_PATH
#error "WQWALK_CLI_PATH must point at the wqwalk binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(WQWALK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "wqwalk_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> read_lines(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("verify subcommand reports and round-trips deterministically") {
    const fs::path dir = work_dir();
    const fs::path edges = dir / "star.edges";
    std::ofstream(edges) << "# weighted star\n0 1 4\n0 2 1\n0 3 1\n0 4 1\n";

    const std::string args =
        "verify szegedy --graph " + edges.string() + " --trials 25 --tol 1e-12 --seed 7";
    const RunResult a = run_cli(args);
    CHECK(a.exit_code == 0);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("trials").get<int>() == 25);
    CHECK(j.at("max_dev_U2_W").get<double>() < 1e-12);
    CHECK(j.at("max_dev_C_R1").get<double>() < 1e-12);
    CHECK(j.at("max_dev_SCS_R2").get<double>() < 1e-12);

    const RunResult b = run_cli(args);
    CHECK(a.out == b.out);  // same seed, same bytes
}

TEST_CASE("line subcommand writes one row per position") {
    const fs::path dir = work_dir();
    const fs::path csv = dir / "line.csv";
    const RunResult r =
        run_cli("line --l 10 --steps 100 --shift moving --out " + csv.string());
    CHECK(r.exit_code == 0);
    const auto lines = read_lines(csv);
    REQUIRE(lines.size() == 202);  // header + 201 positions
    CHECK(lines[0] == "position,probability");
    CHECK(lines[1].rfind("-100,", 0) == 0);
    CHECK(lines[201].rfind("100,", 0) == 0);
    double total = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i)
        total = total + std::stod(lines[i].substr(lines[i].find(',') + 1));
    CHECK(std::abs(total - 1.0) < 1e-12);

    CHECK(run_cli("line --l 1 --rho 0.5").exit_code == 2);  // mutually exclusive
}

TEST_CASE("search subcommand emits the curve and a summary") {
    const fs::path dir = work_dir();
    const fs::path csv = dir / "search.csv";
    const RunResult r =
        run_cli("search --n 256 --l 1 --steps 60 --mode subspace --out " + csv.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("N").get<int>() == 256);
    CHECK(j.at("regime").get<std::string>() == "mid");
    CHECK(j.at("p_peak").get<double>() >= 0.99);
    CHECK(std::abs(j.at("t_peak").get<int>() - 25.13) <= 1.0);
    CHECK(j.at("hump_count").get<int>() == 1);
    const auto lines = read_lines(csv);
    REQUIRE(lines.size() == 62);
    CHECK(lines[0] == "t,p");
    CHECK(std::stod(lines[1].substr(2)) == doctest::Approx(1.0 / 256.0).epsilon(1e-14));

    // the three engines agree at the printed precision
    const fs::path full_csv = dir / "search_full.csv";
    const RunResult full =
        run_cli("search --n 64 --l 1 --steps 40 --mode full --out " + full_csv.string());
    CHECK(full.exit_code == 0);
    const fs::path sub_csv = dir / "search_sub.csv";
    run_cli("search --n 64 --l 1 --steps 40 --mode subspace --out " + sub_csv.string());
    const auto fl = read_lines(full_csv);
    const auto sl = read_lines(sub_csv);
    REQUIRE(fl.size() == sl.size());
    for (std::size_t i = 1; i < fl.size(); ++i) {
        const double pf = std::stod(fl[i].substr(fl[i].find(',') + 1));
        const double ps = std::stod(sl[i].substr(sl[i].find(',') + 1));
        CHECK(std::abs(pf - ps) < 1e-12);
    }
}

TEST_CASE("search scan sweeps loop weights") {
    const fs::path dir = work_dir();
    const fs::path csv = dir / "scan.csv";
    const RunResult r = run_cli("search --n 256 --scan-l 0.5:2:0.5 --out " + csv.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("mode").get<std::string>() == "scan");
    CHECK(j.at("best_l").get<double>() == 1.0);
    const auto lines = read_lines(csv);
    REQUIRE(lines.size() == 5);  // header + weights 0.5, 1, 1.5, 2
    CHECK(lines[0] == "l,t_peak,p_peak,hump_count");
}

TEST_CASE("reduce-verify subcommand passes on both bases") {
    const RunResult line = run_cli("reduce-verify --base line --half-width 31 --k 4 --steps 30");
    CHECK(line.exit_code == 0);
    const auto jl = nlohmann::json::parse(line.out);
    CHECK(jl.at("pass").get<bool>());
    CHECK(jl.at("k").get<int>() == 4);
    CHECK(jl.at("max_dev").get<double>() < 1e-10);

    const RunResult comp = run_cli("reduce-verify --base complete --n 8 --k 2 --steps 25");
    CHECK(comp.exit_code == 0);
    CHECK(nlohmann::json::parse(comp.out).at("pass").get<bool>());

    // half width too small for the requested horizon: refused up front
    const RunResult bad = run_cli("reduce-verify --base line --half-width 10 --k 2 --steps 30");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("figures subcommand drops the whole curve set") {
    const fs::path dir = work_dir() / "figs";
    fs::remove_all(dir);
    const RunResult r = run_cli("figures --outdir " + dir.string());
    CHECK(r.exit_code == 0);
    const std::vector<std::string> expected = {
        "fig3_loopless.csv", "fig3_l10_moving.csv", "fig3_l10_flipflop.csv",
        "fig4a_l0.csv",      "fig4a_l0.1.csv",      "fig4a_l0.2.csv",
        "fig4a_l0.4.csv",    "fig4a_l0.8.csv",      "fig4b_l1.csv",
        "fig4b_l2.5.csv",    "fig4b_l5.csv",        "fig4b_l7.5.csv",
        "fig4b_l10.csv"};
    for (const auto& name : expected) CHECK(fs::exists(dir / name));

    // loopless curve has no mass on odd positions
    for (const auto& row : read_lines(dir / "fig3_loopless.csv")) {
        if (row.rfind("position", 0) == 0) continue;
        const int pos = std::stoi(row.substr(0, row.find(',')));
        const double p = std::stod(row.substr(row.find(',') + 1));
        if (pos % 2 != 0) CHECK(p == 0.0);
    }

    const auto peak_of = [](const fs::path& p) {
        double best = 0.0;
        for (const auto& row : read_lines(p)) {
            if (row.rfind("t,", 0) == 0) continue;
            best = std::max(best, std::stod(row.substr(row.find(',') + 1)));
        }
        return best;
    };
    CHECK(peak_of(dir / "fig4b_l1.csv") >= 0.99);
    const double p04 = peak_of(dir / "fig4a_l0.4.csv");
    CHECK(p04 > 0.78);
    CHECK(p04 < 0.92);

    // a rerun reproduces the same bytes
    const std::string before = slurp(dir / "fig4a_l0.2.csv");
    fs::remove_all(dir);
    run_cli("figures --outdir " + dir.string());
    CHECK(slurp(dir / "fig4a_l0.2.csv") == before);
}

TEST_CASE("bad flags exit with the usage status") {
    CHECK(run_cli("line --shift sideways").exit_code == 2);
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
    CHECK(run_cli("verify szegedy").exit_code == 2);  // --graph is required
    CHECK(run_cli("verify nothing --graph missing.edges").exit_code == 1);
}
