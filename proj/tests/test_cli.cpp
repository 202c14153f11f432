#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "egonet/egonet.hpp"

using Catch::Approx;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

fs::path work_dir() {
    auto dir = fs::temp_directory_path() / "egonet_cli_tests";
    fs::create_directories(dir);
    return dir;
}

CmdResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    auto out_path = work_dir() / ("out" + std::to_string(counter++) + ".txt");
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" EGONET_CLI_PATH "\" " + args + " > " +
                      out_path.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    CmdResult res;
    res.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    res.out = ss.str();
    return res;
}

// parses '#'-commented CSV: first plain line is the header
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    double value(std::size_t row, const std::string& column) const {
        for (std::size_t c = 0; c < header.size(); ++c)
            if (header[c] == column) return std::stod(rows.at(row).at(c));
        throw std::runtime_error("no column " + column);
    }
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream row(line);
        for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
        if (csv.header.empty())
            csv.header = cells;
        else
            csv.rows.push_back(cells);
    }
    return csv;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = work_dir() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

}  // namespace

TEST_CASE("solve er-giant emits bounds, size and threshold") {
    auto res = run_cli("solve er-giant --mu 2");
    REQUIRE(res.code == 0);
    auto csv = parse_csv(res.out);
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.value(0, "tau_rand") == Approx(0.79681).margin(1e-4));
    CHECK(csv.value(0, "tau_min") == 0.0);
    CHECK(csv.value(0, "tau_max") == 1.0);
    CHECK(csv.value(0, "threshold") == Approx(2.0));
}

TEST_CASE("solve two-class below p=1/2 reports no outbreak") {
    auto res = run_cli("solve two-class --p 0.4 --r 0.7");
    REQUIRE(res.code == 0);
    auto csv = parse_csv(res.out);
    CHECK(csv.value(0, "tau") == 0.0);
}

TEST_CASE("solve miller reports the full fixed point") {
    auto jdd = write_temp("mix.jdd", "0 1 0.5\n2 1 0.5\n");
    auto res = run_cli("solve miller --dist " + jdd + " --p 1");
    REQUIRE(res.code == 0);
    auto csv = parse_csv(res.out);
    CHECK(csv.value(0, "tau") == Approx(0.875).margin(1e-9));
    CHECK(csv.value(0, "g1") == Approx(0.0).margin(1e-9));
    CHECK(csv.value(0, "hdelta") == Approx(0.5).margin(1e-9));
    CHECK(csv.value(0, "threshold") == Approx(2.0).margin(1e-12));
}

TEST_CASE("solve sweeps produce one row per grid point") {
    auto res = run_cli("solve er-giant --sweep mu --from 0.5 --to 3 --points 6");
    REQUIRE(res.code == 0);
    auto csv = parse_csv(res.out);
    REQUIRE(csv.rows.size() == 6);
    CHECK(csv.value(0, "tau_rand") == 0.0);
    CHECK(csv.value(5, "mu") == Approx(3.0));
    for (const auto& row : csv.rows) REQUIRE(row.size() == csv.header.size());
}

TEST_CASE("generate writes an edge list and a report row") {
    auto out = (work_dir() / "cliques.el").string();
    auto res = run_cli("generate clique-tiling --n 600 --mu 5 --out " + out);
    REQUIRE(res.code == 0);
    auto csv = parse_csv(res.out);
    CHECK(csv.value(0, "edges") == 1500);
    CHECK(csv.value(0, "erased_edges") == 0);
    std::ifstream in(out);
    auto g = egonet::Graph::read_edge_list(in);
    CHECK(g.node_count() == 600);
    CHECK(g.edge_count() == 1500);
}

TEST_CASE("generate starlike to stdout: hub adjacent to everyone") {
    auto res = run_cli("generate starlike --n 100 --mu 2");
    REQUIRE(res.code == 0);
    std::istringstream in(res.out);
    auto g = egonet::Graph::read_edge_list(in);
    CHECK(g.degree(0) == 99);
}

TEST_CASE("simulate pairs the estimate with the analytic value") {
    auto dd = write_temp("deg.dd", "2 0.6\n3 0.4\n");
    auto res = run_cli("simulate --model config --dist " + dd +
                       " --n 20000 --p 1 --runs 150 --seed 7");
    REQUIRE(res.code == 0);
    auto csv = parse_csv(res.out);
    CHECK(csv.value(0, "tau_analytic") == Approx(1.0).margin(1e-9));
    CHECK(csv.value(0, "tau_hat") == Approx(1.0).margin(0.02));
    CHECK(csv.value(0, "runs") == 150);
}

TEST_CASE("simulate at the epidemic threshold stays minor") {
    auto res = run_cli("simulate --model er --n 20000 --mu 2 --p 0.5 --runs 200 --seed 5");
    REQUIRE(res.code == 0);
    auto csv = parse_csv(res.out);
    CHECK(csv.value(0, "pi_hat") < 0.05);
    CHECK(csv.value(0, "tau_analytic") == 0.0);
}

TEST_CASE("figure sweeps emit well-formed rows") {
    auto res = run_cli("figure fig4 --points 4");
    REQUIRE(res.code == 0);
    auto csv = parse_csv(res.out);
    REQUIRE(csv.header == std::vector<std::string>{"p", "r_max", "tau_max"});
    REQUIRE(csv.rows.size() == 4);
    for (const auto& row : csv.rows) REQUIRE(row.size() == 3);
    CHECK(csv.value(3, "p") == Approx(1.0));

    auto fig2 = parse_csv(run_cli("figure fig2 --points 5").out);
    CHECK(fig2.rows.size() == 5);
    CHECK(fig2.value(0, "tau_rand") == 0.0);  // mu close to 0
}

TEST_CASE("exit codes distinguish usage from runtime failures") {
    CHECK(run_cli("solve no-such-quantity --mu 1").code == 2);
    CHECK(run_cli("solve er-giant --mu 2 --bogus-flag 1").code == 2);
    CHECK(run_cli("solve er-giant --mu -3").code == 2);
    CHECK(run_cli("generate clique-tiling --n 10 --mu 0.5").code == 2);
    CHECK(run_cli("solve config-giant --dist /nonexistent/file.dd").code == 3);
    CHECK(run_cli("simulate --graph /nonexistent/g.el --p 1").code == 3);
    CHECK(run_cli("solve er-giant --mu 2").code == 0);
}

TEST_CASE("identical seeds give byte-identical output") {
    const std::string gen_cmd = "generate config --n 5000 --dist " +
                                write_temp("det.dd", "1 0.3\n2 0.4\n3 0.3\n") + " --seed 42";
    auto first = run_cli(gen_cmd);
    auto second = run_cli(gen_cmd);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);

    const std::string sim_cmd = "simulate --model er --n 10000 --mu 2 --p 0.7 --runs 200 --seed 9";
    auto sim1 = run_cli(sim_cmd);
    auto sim2 = run_cli(sim_cmd);
    REQUIRE(sim1.code == 0);
    CHECK(sim1.out == sim2.out);

    // thread cap must not affect results
    auto threads1 = run_cli(sim_cmd, "EGONET_THREADS=1");
    auto threads4 = run_cli(sim_cmd, "EGONET_THREADS=4");
    CHECK(threads1.out == threads4.out);
    CHECK(threads1.out == sim1.out);
}
