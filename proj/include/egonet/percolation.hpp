#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "egonet/graph.hpp"
#include "egonet/rng.hpp"

namespace egonet {

// Monte Carlo summary of repeated single-index-case outbreaks.
struct OutbreakEstimate {
    std::size_t runs = 0;
    std::size_t major_threshold = 0;  // node count classifying a run as major
    double p = 1.0;
    double pi_hat = 0.0;                  // fraction of runs that were major
    double pi_ci = 0.0;                   // 95% normal half-width
    std::optional<double> tau_hat;        // mean relative size over major runs
    std::optional<double> tau_ci;
    std::size_t major_runs = 0;
};

inline std::size_t default_major_threshold(std::size_t n) {
    return static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), 2.0 / 3.0)));
}

// Retains every edge independently with probability p. Edges are visited
// in canonical (u < v ascending) order, so a fixed seed yields coupled
// subgraphs that only grow with p.
inline Graph percolate(const Graph& g, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must lie in [0,1]");
    Rng rng(seed);
    EdgeList kept;
    kept.reserve(static_cast<std::size_t>(static_cast<double>(g.edge_count()) * p) + 16);
    g.for_each_edge([&](NodeId u, NodeId v) {
        if (rng.unit() < p) kept.emplace_back(u, v);
    });
    return Graph::from_edges(g.node_count(), std::move(kept));
}

// Connected-component sizes via disjoint-set union, sorted descending.
inline std::vector<std::size_t> component_sizes(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<NodeId> parent(n);
    std::iota(parent.begin(), parent.end(), NodeId{0});
    std::vector<std::uint32_t> size(n, 1);
    auto find = [&](NodeId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    g.for_each_edge([&](NodeId u, NodeId v) {
        NodeId ru = find(u), rv = find(v);
        if (ru == rv) return;
        if (size[ru] < size[rv]) std::swap(ru, rv);
        parent[rv] = ru;
        size[ru] += size[rv];
    });
    std::vector<std::size_t> sizes;
    for (NodeId i = 0; i < n; ++i)
        if (find(i) == i) sizes.push_back(size[i]);
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

inline double giant_fraction(const Graph& g) {
    if (g.node_count() == 0) return 0.0;
    return static_cast<double>(component_sizes(g).front()) / static_cast<double>(g.node_count());
}

namespace detail {

// Breadth-first outbreak exploration with deferred edge coins: the coin of
// an edge is flipped the first time it is inspected from an infected
// endpoint while the far endpoint is still susceptible. Since an endpoint
// is dequeued once and flips happen only toward unvisited nodes, every
// edge is flipped at most once, and the reached set has exactly the law of
// the percolation component of the index case.
class OutbreakWorker {
public:
    explicit OutbreakWorker(const Graph& g)
        : graph_(g), visited_(g.node_count(), 0), queue_(g.node_count()) {}

    std::size_t run(double p, std::uint64_t seed) {
        Rng rng(seed);
        ++stamp_;
        const auto index_case = static_cast<NodeId>(rng.below(graph_.node_count()));
        std::size_t head = 0, tail = 0;
        queue_[tail++] = index_case;
        visited_[index_case] = stamp_;
        std::size_t infected = 1;
        while (head < tail) {
            NodeId u = queue_[head++];
            for (NodeId v : graph_.neighbors(u)) {
                if (visited_[v] == stamp_) continue;
                if (p < 1.0 && rng.unit() >= p) continue;
                visited_[v] = stamp_;
                queue_[tail++] = v;
                ++infected;
            }
        }
        return infected;
    }

private:
    const Graph& graph_;
    std::vector<std::uint64_t> visited_;
    std::vector<NodeId> queue_;
    std::uint64_t stamp_ = 0;
};

inline unsigned thread_budget() {
    if (const char* env = std::getenv("EGONET_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace detail

// Final size of one Reed-Frost outbreak started at a uniformly random
// index case, equivalent in law to percolating with retention p and taking
// the index case's component.
inline std::size_t run_outbreak(const Graph& g, double p, std::uint64_t seed) {
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p must lie in (0,1]");
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");
    detail::OutbreakWorker worker(g);
    return worker.run(p, seed);
}

// Repeats run_outbreak with independent per-run seeds derived from
// (seed, run index) and classifies runs as major when they reach
// major_threshold nodes (0 selects ceil(n^(2/3))). Runs are distributed
// over a thread pool capped by EGONET_THREADS; results are identical for
// any thread count.
inline OutbreakEstimate estimate_outbreak(const Graph& g, double p, std::size_t runs,
                                          std::size_t major_threshold, std::uint64_t seed) {
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p must lie in (0,1]");
    if (runs < 1) throw std::invalid_argument("need at least one run");
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");

    OutbreakEstimate est;
    est.runs = runs;
    est.p = p;
    est.major_threshold = major_threshold == 0 ? default_major_threshold(g.node_count())
                                               : major_threshold;

    std::vector<std::uint32_t> sizes(runs);
    const unsigned threads = std::min<unsigned>(detail::thread_budget(),
                                                static_cast<unsigned>(runs));
    auto work = [&](unsigned t) {
        detail::OutbreakWorker worker(g);
        for (std::size_t i = t; i < runs; i += threads)
            sizes[i] = static_cast<std::uint32_t>(worker.run(p, derive_seed(seed, i)));
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    const double n = static_cast<double>(g.node_count());
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint32_t s : sizes) {
        if (s >= est.major_threshold) {
            ++est.major_runs;
            double rel = static_cast<double>(s) / n;
            sum += rel;
            sum_sq += rel * rel;
        }
    }
    est.pi_hat = static_cast<double>(est.major_runs) / static_cast<double>(runs);
    est.pi_ci = 1.96 * std::sqrt(est.pi_hat * (1.0 - est.pi_hat) / static_cast<double>(runs));
    if (est.major_runs > 0) {
        const double m = static_cast<double>(est.major_runs);
        est.tau_hat = sum / m;
        double var = est.major_runs > 1 ? std::max(0.0, (sum_sq - sum * sum / m) / (m - 1.0)) : 0.0;
        est.tau_ci = 1.96 * std::sqrt(var / m);
    }
    return est;
}

// Exact per-index-case outbreak-size law obtained by enumerating every
// edge keep/drop pattern; usable for graphs with at most 12 edges.
struct ExactOutbreakDistribution {
    std::vector<std::map<std::size_t, double>> per_node;  // node -> {size: probability}

    // law of the final size when the index case is uniform
    std::map<std::size_t, double> aggregate() const {
        std::map<std::size_t, double> agg;
        for (const auto& dist : per_node)
            for (const auto& [size, prob] : dist) agg[size] += prob / per_node.size();
        return agg;
    }

    double mean_size(std::size_t node) const {
        double m = 0.0;
        for (const auto& [size, prob] : per_node[node]) m += static_cast<double>(size) * prob;
        return m;
    }
};

inline ExactOutbreakDistribution exact_small_outbreak_oracle(const Graph& g, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must lie in [0,1]");
    const EdgeList edges = g.edges();
    if (edges.size() > 12) throw std::invalid_argument("exact oracle limited to 12 edges");
    const std::size_t n = g.node_count();
    ExactOutbreakDistribution out;
    out.per_node.resize(n);

    std::vector<NodeId> parent(n);
    std::vector<std::uint32_t> size(n);
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
        double prob = 1.0;
        std::iota(parent.begin(), parent.end(), NodeId{0});
        std::fill(size.begin(), size.end(), 1u);
        auto find = [&](NodeId x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (mask & (1u << e)) {
                prob *= p;
                NodeId ru = find(edges[e].first), rv = find(edges[e].second);
                if (ru != rv) {
                    if (size[ru] < size[rv]) std::swap(ru, rv);
                    parent[rv] = ru;
                    size[ru] += size[rv];
                }
            } else {
                prob *= 1.0 - p;
            }
        }
        if (prob == 0.0) continue;
        for (NodeId v = 0; v < n; ++v) out.per_node[v][size[find(v)]] += prob;
    }
    return out;
}

}  // namespace egonet
