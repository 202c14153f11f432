// egonet: analytic bounds and Monte Carlo validation for giant components
// and epidemic outbreaks on networks described by egocentric data.
//
//   egonet solve    <er-giant|er-epi|config-giant|config-epi|two-class|miller|extremal> ...
//   egonet generate <clique-tiling|line|starlike|config|gnm|two-class|clustered|triangle-cycle> ...
//   egonet simulate [--graph FILE | --model NAME ...] --p P --runs R --seed S
//   egonet figure   <fig2|fig3a|fig3b|fig3c|fig3d|fig4|fig6> ...
//
// All tabular output is CSV on stdout with '#' provenance comments.
// Exit codes: 0 success, 2 usage/infeasible parameters, 3 numeric or IO failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "egonet/egonet.hpp"

namespace {

using namespace egonet;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : "nan"; }

void print_provenance(std::ostream& out, int argc, char** argv) {
    out << "# egonet";
    for (int i = 1; i < argc; ++i) out << ' ' << argv[i];
    out << '\n';
}

void print_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
}

DegreeDistribution load_degree_distribution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open degree-distribution file: " + path);
    return DegreeDistribution::parse(in);
}

JointDegreeDistribution load_joint_distribution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open joint-distribution file: " + path);
    return JointDegreeDistribution::parse(in);
}

std::vector<double> sweep_grid(double from, double to, int points) {
    if (points < 2) throw std::invalid_argument("sweep needs at least 2 points");
    if (!(from < to)) throw std::invalid_argument("sweep start must be below stop");
    std::vector<double> vs(points);
    for (int i = 0; i < points; ++i)
        vs[i] = from + (to - from) * static_cast<double>(i) / (points - 1);
    return vs;
}

struct SolveArgs {
    std::string kind;
    double mu = 0.0;
    double p = 1.0;
    double r = 0.0;
    std::string dist;
    std::string sweep;
    double from = 0.0, to = 0.0;
    int points = 0;  // 0: use the settings default
    double tol = 1e-12;
    std::size_t max_iter = 1'000'000;
    int r_grid = 201;
    // optional Monte Carlo cross-check
    std::size_t check_n = 0;
    std::size_t check_runs = 1000;
    std::uint64_t check_seed = 1;
};

struct GenerateArgs {
    std::string kind;
    std::size_t n = 0;
    double mu = 0.0;
    std::size_t m = 0;
    double p2 = 0.6;
    double r = 0.0;
    bool assortative = false;
    std::string dist;
    std::uint64_t seed = 1;
    std::string out;
};

struct SimulateArgs {
    std::string graph;
    std::string model;
    std::size_t n = 0;
    double mu = 0.0;
    std::size_t m = 0;
    double p2 = 0.6;
    double r = 0.0;
    bool assortative = false;
    std::string dist;
    double p = 1.0;
    std::size_t runs = 1000;
    std::size_t threshold = 0;
    std::uint64_t seed = 1;
};

struct FigureArgs {
    std::string name;
    int points = 0;  // 0 = per-figure default
    bool simulate = false;
    std::size_t n = 100'000;
    std::uint64_t seed = 1;
};

// simulation cross-check columns appended to solve rows
struct CheckColumns {
    static std::vector<std::string> header() { return {"pi_hat", "pi_ci", "tau_hat", "tau_ci"}; }
    static std::vector<std::string> cells(const OutbreakEstimate& est) {
        return {fmt(est.pi_hat), fmt(est.pi_ci), fmt_opt(est.tau_hat), fmt_opt(est.tau_ci)};
    }
};

int run_solve(const SolveArgs& a, int argc, char** argv) {
    SolverSettings st;
    st.tol = a.tol;
    st.max_iter = a.max_iter;
    st.r_grid = a.r_grid;

    const bool check = a.check_n > 0;
    auto grid = [&](double fixed) {
        if (a.sweep.empty()) return std::vector<double>{fixed};
        return sweep_grid(a.from, a.to, a.points > 0 ? a.points : st.p_grid);
    };
    auto check_estimate = [&](const Graph& g, double p) {
        return estimate_outbreak(g, p, a.check_runs, 0, derive_seed(a.check_seed, 0x73696d));
    };

    print_provenance(std::cout, argc, argv);
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    if (a.kind == "er-giant" || a.kind == "er-epi") {
        const bool epi = a.kind == "er-epi";
        if (!a.sweep.empty() && a.sweep != "mu" && !(epi && a.sweep == "p"))
            throw std::invalid_argument("unsupported sweep parameter: " + a.sweep);
        header = {"mu", "p", "tau_min", "tau_max", "tau_rand", "threshold"};
        if (check) for (auto& c : CheckColumns::header()) header.push_back(c);
        bool sweep_p = a.sweep == "p";
        for (double v : grid(sweep_p ? a.p : a.mu)) {
            double mu = sweep_p ? a.mu : v;
            double p = sweep_p ? v : (epi ? a.p : 1.0);
            double tau_max = epi ? tau_epi_max_mean(mu, p) : tau_max_mean(mu);
            double tau = epi ? solve_er_epidemic(mu, p, st) : solve_er_giant(mu, st);
            std::vector<std::string> row{fmt(mu), fmt(p), fmt(tau_min_any_level()),
                                         fmt(tau_max), fmt(tau), fmt(mu * p)};
            if (check) {
                auto m_edges = static_cast<std::size_t>(
                    std::llround(mu * static_cast<double>(a.check_n) / 2.0));
                auto g = gen_er_gnm(a.check_n, m_edges, derive_seed(a.check_seed, 0x67656e));
                for (auto& c : CheckColumns::cells(check_estimate(g.graph, p))) row.push_back(c);
            }
            rows.push_back(std::move(row));
        }
    } else if (a.kind == "config-giant" || a.kind == "config-epi") {
        const bool epi = a.kind == "config-epi";
        if (a.dist.empty()) throw std::invalid_argument("config solves need --dist");
        if (!a.sweep.empty() && !(epi && a.sweep == "p"))
            throw std::invalid_argument("config solves sweep only p");
        DegreeDistribution d = load_degree_distribution(a.dist);
        header = {"mu", "sigma2", "p", "tau_min", "tau_max", "tau_rand", "threshold"};
        if (check) for (auto& c : CheckColumns::header()) header.push_back(c);
        std::optional<Generated> g;
        if (check) g = gen_configuration(a.check_n, d, derive_seed(a.check_seed, 0x67656e));
        for (double p : grid(epi ? a.p : 1.0)) {
            double tau = epi ? solve_config_epidemic(d, p, st) : solve_config_giant(d, st);
            double threshold = epi ? basic_reproduction_number(d, p) : mean_excess_degree(d);
            // no closed-form epidemic maximum exists at this data level
            std::vector<std::string> row{fmt(d.mean()), fmt(d.variance()), fmt(p),
                                         fmt(tau_min_any_level()),
                                         epi ? "nan" : fmt(tau_max_degree(d)),
                                         fmt(tau), fmt(threshold)};
            if (check)
                for (auto& c : CheckColumns::cells(check_estimate(g->graph, p))) row.push_back(c);
            rows.push_back(std::move(row));
        }
    } else if (a.kind == "two-class") {
        if (!a.sweep.empty() && a.sweep != "r" && a.sweep != "p")
            throw std::invalid_argument("two-class sweeps r or p");
        header = {"r", "p", "eta2", "eta3", "tau"};
        if (check) for (auto& c : CheckColumns::header()) header.push_back(c);
        bool sweep_p = a.sweep == "p";
        for (double v : grid(sweep_p ? a.p : a.r)) {
            double r = sweep_p ? a.r : v;
            double p = sweep_p ? v : a.p;
            EtaPair eta = solve_eta_system(0.6, 0.4, r, p, st);
            double tau = outbreak_size_two_class(r, p, st);
            std::vector<std::string> row{fmt(r), fmt(p), fmt(eta.eta2), fmt(eta.eta3), fmt(tau)};
            if (check) {
                auto g = gen_two_class_correlated(a.check_n, 0.6, 0.4, r,
                                                  derive_seed(a.check_seed, 0x67656e));
                for (auto& c : CheckColumns::cells(check_estimate(g.graph, p))) row.push_back(c);
            }
            rows.push_back(std::move(row));
        }
    } else if (a.kind == "miller") {
        if (a.dist.empty()) throw std::invalid_argument("miller solves need --dist (joint format)");
        if (!a.sweep.empty() && a.sweep != "p")
            throw std::invalid_argument("miller sweeps only p");
        JointDegreeDistribution j = load_joint_distribution(a.dist);
        header = {"p", "g1", "h1", "gdelta", "hdelta", "tau", "threshold"};
        if (check) for (auto& c : CheckColumns::header()) header.push_back(c);
        std::optional<Generated> g;
        if (check) g = gen_clustered(a.check_n, j, false, derive_seed(a.check_seed, 0x67656e));
        for (double p : grid(a.p)) {
            MillerSolution sol = solve_miller(j, p, st);
            std::vector<std::string> row{fmt(p), fmt(sol.g1), fmt(sol.h1), fmt(sol.gdelta),
                                         fmt(sol.hdelta), fmt(sol.tau), fmt(r0_miller(j, p))};
            if (check)
                for (auto& c : CheckColumns::cells(check_estimate(g->graph, p))) row.push_back(c);
            rows.push_back(std::move(row));
        }
    } else if (a.kind == "extremal") {
        // analytic extremal bounds at the level implied by the inputs
        if (!a.dist.empty()) {
            DegreeDistribution d = load_degree_distribution(a.dist);
            header = {"mu", "tau_min", "tau_max"};
            rows.push_back({fmt(d.mean()), fmt(tau_min_any_level()), fmt(tau_max_degree(d))});
        } else {
            if (!a.sweep.empty() && a.sweep != "mu")
                throw std::invalid_argument("extremal sweeps only mu");
            header = {"mu", "p", "tau_min", "tau_max_giant", "tau_epi_max"};
            for (double mu : grid(a.mu)) {
                rows.push_back({fmt(mu), fmt(a.p), fmt(tau_min_any_level()), fmt(tau_max_mean(mu)),
                                fmt(tau_epi_max_mean(mu, a.p))});
            }
        }
    } else {
        throw std::invalid_argument("unknown solve quantity: " + a.kind);
    }

    print_row(std::cout, header);
    for (auto& row : rows) print_row(std::cout, row);
    return 0;
}

Generated build_model(const std::string& model, std::size_t n, double mu, std::size_t m,
                      double p2, double r, bool assortative, const std::string& dist,
                      std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("--n is required for model generation");
    if (model == "clique-tiling") return gen_clique_tiling(n, mu);
    if (model == "line") {
        if (!dist.empty()) return gen_line_construction(n, load_degree_distribution(dist));
        return gen_line_construction(n, mu);
    }
    if (model == "starlike") return gen_starlike(n, mu);
    if (model == "triangle-cycle") return gen_triangle_cycle_tiling(n);
    if (model == "gnm") return gen_er_gnm(n, m, seed);
    if (model == "er") {
        auto edges = static_cast<std::size_t>(std::llround(mu * static_cast<double>(n) / 2.0));
        return gen_er_gnm(n, edges, seed);
    }
    if (model == "config") {
        if (dist.empty()) throw std::invalid_argument("config model needs --dist");
        return gen_configuration(n, load_degree_distribution(dist), seed);
    }
    if (model == "two-class") return gen_two_class_correlated(n, p2, 1.0 - p2, r, seed);
    if (model == "clustered") {
        if (dist.empty()) throw std::invalid_argument("clustered model needs --dist (joint format)");
        return gen_clustered(n, load_joint_distribution(dist), assortative, seed);
    }
    throw std::invalid_argument("unknown model: " + model);
}

int run_generate(const GenerateArgs& a, int argc, char** argv) {
    Generated gen = build_model(a.kind, a.n, a.mu, a.m, a.p2, a.r, a.assortative, a.dist, a.seed);

    // degree audit against the requested target where one is defined
    std::optional<double> tv;
    if (a.kind == "config" || (a.kind == "line" && !a.dist.empty()))
        tv = degree_tv_distance(gen.graph, load_degree_distribution(a.dist));
    else if (a.kind == "clustered")
        tv = degree_tv_distance(gen.graph, load_joint_distribution(a.dist).total_degree_marginal());
    else if (a.kind == "two-class")
        tv = degree_tv_distance(gen.graph, DegreeDistribution::from_map({{2, a.p2}, {3, 1.0 - a.p2}}));

    const double mean_deg = 2.0 * static_cast<double>(gen.graph.edge_count()) /
                            static_cast<double>(gen.graph.node_count());
    std::ostringstream report;
    report << "nodes,edges,erased_edges,dropped_stubs,resampled_nodes,mean_degree,degree_tv\n"
           << gen.report.nodes << ',' << gen.report.edges << ',' << gen.report.erased_edges << ','
           << gen.report.dropped_stubs << ',' << gen.report.resampled_nodes << ',' << fmt(mean_deg)
           << ',' << (tv ? fmt(*tv) : "nan") << '\n';

    if (!a.out.empty()) {
        std::ofstream out(a.out);
        if (!out) throw std::runtime_error("cannot open output file: " + a.out);
        print_provenance(out, argc, argv);
        gen.graph.write_edge_list(out);
        print_provenance(std::cout, argc, argv);
        std::cout << report.str();
    } else {
        print_provenance(std::cout, argc, argv);
        std::istringstream rep(report.str());
        for (std::string line; std::getline(rep, line);) std::cout << "# " << line << '\n';
        gen.graph.write_edge_list(std::cout);
    }
    return 0;
}

int run_simulate(const SimulateArgs& a, int argc, char** argv) {
    if (a.graph.empty() == a.model.empty())
        throw std::invalid_argument("simulate needs exactly one of --graph or --model");

    Graph graph(0);
    std::optional<double> tau_analytic;
    if (!a.graph.empty()) {
        std::ifstream in(a.graph);
        if (!in) throw std::runtime_error("cannot open graph file: " + a.graph);
        graph = Graph::read_edge_list(in);
    } else {
        graph = build_model(a.model, a.n, a.mu, a.m, a.p2, a.r, a.assortative, a.dist,
                            derive_seed(a.seed, 0x67656e))
                    .graph;
        if (a.model == "er")
            tau_analytic = solve_er_epidemic(a.mu, a.p);
        else if (a.model == "config")
            tau_analytic = solve_config_epidemic(load_degree_distribution(a.dist), a.p);
        else if (a.model == "clustered" && !a.assortative)
            tau_analytic = solve_miller(load_joint_distribution(a.dist), a.p).tau;
        else if (a.model == "two-class" && std::abs(a.p2 - 0.6) < 1e-12)
            tau_analytic = outbreak_size_two_class(a.r, a.p);
        else if (a.model == "starlike")
            tau_analytic = tau_epi_max_mean(a.mu, a.p);
        else if (a.model == "clique-tiling")
            tau_analytic = 0.0;
    }

    OutbreakEstimate est =
        estimate_outbreak(graph, a.p, a.runs, a.threshold, derive_seed(a.seed, 0x73696d));

    print_provenance(std::cout, argc, argv);
    print_row(std::cout, {"n", "m", "p", "runs", "major_threshold", "major_runs", "pi_hat",
                          "pi_ci", "tau_hat", "tau_ci", "tau_analytic"});
    print_row(std::cout,
              {std::to_string(graph.node_count()), std::to_string(graph.edge_count()), fmt(a.p),
               std::to_string(est.runs), std::to_string(est.major_threshold),
               std::to_string(est.major_runs), fmt(est.pi_hat), fmt(est.pi_ci),
               fmt_opt(est.tau_hat), fmt_opt(est.tau_ci), fmt_opt(tau_analytic)});
    return 0;
}

int run_figure(const FigureArgs& a, int argc, char** argv) {
    SolverSettings st;
    print_provenance(std::cout, argc, argv);
    auto pick_points = [&](int dflt) { return a.points > 0 ? a.points : dflt; };

    if (a.name == "fig2") {
        print_row(std::cout, a.simulate ? std::vector<std::string>{"mu", "tau_rand", "sim_giant"}
                                        : std::vector<std::string>{"mu", "tau_rand"});
        for (double mu : sweep_grid(0.05, 4.0, pick_points(80))) {
            std::vector<std::string> row{fmt(mu), fmt(solve_er_giant(mu, st))};
            if (a.simulate) {
                auto m = static_cast<std::size_t>(std::llround(mu * static_cast<double>(a.n) / 2.0));
                row.push_back(fmt(giant_fraction(
                    gen_er_gnm(a.n, m, derive_seed(a.seed, static_cast<std::uint64_t>(mu * 1e6)))
                        .graph)));
            }
            print_row(std::cout, row);
        }
        return 0;
    }
    if (a.name == "fig3a" || a.name == "fig3b" || a.name == "fig3c" || a.name == "fig3d") {
        // negative-binomial degree distributions: tau_rand against mean /
        // excess-degree ratio / variance, per panel
        print_row(std::cout, {"mu", "sigma2", "r_g", "tau_rand"});
        auto emit = [&](double mu, double sigma2) {
            DegreeDistribution d = negative_binomial_distribution(mu, sigma2);
            print_row(std::cout, {fmt(mu), fmt(sigma2), fmt(mean_excess_degree(d)),
                                  fmt(solve_config_giant(d, st))});
        };
        if (a.name == "fig3a")
            for (double mu : sweep_grid(0.05, 1.95, pick_points(39))) emit(mu, 2.0);
        else if (a.name == "fig3b")
            for (double mu : sweep_grid(0.05, 1.95, pick_points(39)))
                emit(mu, mu * (2.0 - mu + 1.0));
        else if (a.name == "fig3c")
            for (double rg : sweep_grid(1.05, 5.0, pick_points(40))) emit(1.0, rg);
        else
            for (double s2 : sweep_grid(1.05, 5.0, pick_points(40))) emit(1.0, s2);
        return 0;
    }
    if (a.name == "fig4") {
        print_row(std::cout, {"p", "r_max", "tau_max"});
        for (double p : sweep_grid(0.51, 1.0, pick_points(50))) {
            RMaxResult best = find_r_max(p, st);
            print_row(std::cout, {fmt(p), best.r_max ? fmt(*best.r_max) : "nan", fmt(best.tau)});
        }
        return 0;
    }
    if (a.name == "fig6") {
        JointDegreeDistribution j =
            JointDegreeDistribution::from_map({{{0, 1}, 0.5}, {{2, 1}, 0.5}});
        JointDegreeDistribution connected_class =
            JointDegreeDistribution::from_map({{{2, 1}, 1.0}});
        std::vector<std::string> header{"p", "tau_random", "tau_assortative"};
        if (a.simulate) {
            header.push_back("sim_random");
            header.push_back("sim_assortative");
        }
        print_row(std::cout, header);
        int idx = 0;
        for (double p : sweep_grid(0.05, 1.0, pick_points(20))) {
            double tau_random = solve_miller(j, p, st).tau;
            // assortative triangles split the population into isolated
            // triangles (the (0,1) half) plus a clustered model on the
            // (2,1) half, whose singles only ever join (2,1) nodes
            double tau_assort = 0.5 * solve_miller(connected_class, p, st).tau;
            std::vector<std::string> row{fmt(p), fmt(tau_random), fmt(tau_assort)};
            if (a.simulate) {
                for (bool assort : {false, true}) {
                    auto g = gen_clustered(a.n, j, assort,
                                           derive_seed(a.seed, static_cast<std::uint64_t>(idx) * 2 +
                                                                   (assort ? 1 : 0)));
                    Graph percolated =
                        percolate(g.graph, p, derive_seed(a.seed, 0x70657263 + idx));
                    row.push_back(fmt(giant_fraction(percolated)));
                }
            }
            print_row(std::cout, row);
            ++idx;
        }
        return 0;
    }
    throw std::invalid_argument("unknown figure: " + a.name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analytic and Monte Carlo analysis of networks from egocentric data"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "analytic sizes, bounds and thresholds");
    solve->add_option("kind", solve_args.kind, "quantity")
        ->required()
        ->check(CLI::IsMember({"er-giant", "er-epi", "config-giant", "config-epi", "two-class",
                               "miller", "extremal"}));
    solve->add_option("--mu", solve_args.mu, "mean degree");
    solve->add_option("--p", solve_args.p, "transmission probability");
    solve->add_option("--r", solve_args.r, "assortativity parameter");
    solve->add_option("--dist", solve_args.dist, "distribution file (two- or three-column)");
    solve->add_option("--sweep", solve_args.sweep, "parameter to sweep (mu|p|r)");
    solve->add_option("--from", solve_args.from, "sweep start");
    solve->add_option("--to", solve_args.to, "sweep stop");
    solve->add_option("--points", solve_args.points, "sweep grid points (default 101)");
    solve->add_option("--tol", solve_args.tol, "fixed-point tolerance");
    solve->add_option("--max-iter", solve_args.max_iter, "fixed-point iteration cap");
    solve->add_option("--r-grid", solve_args.r_grid, "grid points for the r search");
    solve->add_option("--check-n", solve_args.check_n, "cross-check graph size (0 = off)");
    solve->add_option("--check-runs", solve_args.check_runs, "cross-check outbreak runs");
    solve->add_option("--check-seed", solve_args.check_seed, "cross-check seed");

    GenerateArgs gen_args;
    auto* generate = app.add_subcommand("generate", "write an explicit network as an edge list");
    generate->add_option("kind", gen_args.kind, "construction")
        ->required()
        ->check(CLI::IsMember({"clique-tiling", "line", "starlike", "config", "gnm", "er",
                               "two-class", "clustered", "triangle-cycle"}));
    generate->add_option("--n", gen_args.n, "node count")->required();
    generate->add_option("--mu", gen_args.mu, "mean degree");
    generate->add_option("--m", gen_args.m, "edge count (gnm)");
    generate->add_option("--p2", gen_args.p2, "degree-2 fraction (two-class)");
    generate->add_option("--r", gen_args.r, "assortativity parameter (two-class)");
    generate->add_flag("--assortative", gen_args.assortative, "class-assortative triangles");
    generate->add_option("--dist", gen_args.dist, "distribution file");
    generate->add_option("--seed", gen_args.seed, "random seed");
    generate->add_option("--out", gen_args.out, "edge-list output file (default stdout)");

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo outbreak estimation");
    simulate->add_option("--graph", sim_args.graph, "edge-list file to load");
    simulate->add_option("--model", sim_args.model, "model to generate")
        ->check(CLI::IsMember({"clique-tiling", "line", "starlike", "config", "gnm", "er",
                               "two-class", "clustered", "triangle-cycle"}));
    simulate->add_option("--n", sim_args.n, "node count");
    simulate->add_option("--mu", sim_args.mu, "mean degree");
    simulate->add_option("--m", sim_args.m, "edge count (gnm)");
    simulate->add_option("--p2", sim_args.p2, "degree-2 fraction (two-class)");
    simulate->add_option("--r", sim_args.r, "assortativity parameter (two-class)");
    simulate->add_flag("--assortative", sim_args.assortative, "class-assortative triangles");
    simulate->add_option("--dist", sim_args.dist, "distribution file");
    simulate->add_option("--p", sim_args.p, "transmission probability")->required();
    simulate->add_option("--runs", sim_args.runs, "outbreak repetitions");
    simulate->add_option("--threshold", sim_args.threshold,
                         "major-outbreak node threshold (0 = ceil(n^(2/3)))");
    simulate->add_option("--seed", sim_args.seed, "random seed");

    FigureArgs fig_args;
    auto* figure = app.add_subcommand("figure", "parameter sweeps behind the standard figures");
    figure->add_option("name", fig_args.name, "figure name")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3a", "fig3b", "fig3c", "fig3d", "fig4", "fig6"}));
    figure->add_option("--points", fig_args.points, "override grid resolution");
    figure->add_flag("--simulate", fig_args.simulate, "append Monte Carlo columns");
    figure->add_option("--n", fig_args.n, "simulation graph size");
    figure->add_option("--seed", fig_args.seed, "simulation seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args, argc, argv);
        if (generate->parsed()) return run_generate(gen_args, argc, argv);
        if (simulate->parsed()) return run_simulate(sim_args, argc, argv);
        if (figure->parsed()) return run_figure(fig_args, argc, argv);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "egonet: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "egonet: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "egonet: " << e.what() << '\n';
        return 3;
    }
}
