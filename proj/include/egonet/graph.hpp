#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "egonet/distribution.hpp"

namespace egonet {

using NodeId = std::uint32_t;
using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

// Simple undirected graph with sorted adjacency lists. Immutable after
// construction; all generators funnel through from_edges which drops
// self-loops and collapses multi-edges.
class Graph {
public:
    explicit Graph(std::size_t n) : adjacency_(n) {}

    // Builds the simple graph spanned by `edges`; duplicates (in either
    // orientation) and self-loops are erased. erased_out, when non-null,
    // receives the number of erased entries.
    static Graph from_edges(std::size_t n, EdgeList edges, std::size_t* erased_out = nullptr) {
        std::size_t erased = 0;
        for (auto& [u, v] : edges) {
            if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::erase_if(edges, [&](const auto& e) {
            if (e.first == e.second) {
                ++erased;
                return true;
            }
            return false;
        });
        std::sort(edges.begin(), edges.end());
        auto last = std::unique(edges.begin(), edges.end());
        erased += static_cast<std::size_t>(edges.end() - last);
        edges.erase(last, edges.end());
        if (erased_out) *erased_out = erased;

        Graph g(n);
        std::vector<std::uint32_t> deg(n, 0);
        for (const auto& [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        for (std::size_t i = 0; i < n; ++i) g.adjacency_[i].reserve(deg[i]);
        for (const auto& [u, v] : edges) {
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
        }
        for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
        g.edge_count_ = edges.size();
        return g;
    }

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const NodeId> neighbors(NodeId u) const { return adjacency_[u]; }
    std::size_t degree(NodeId u) const { return adjacency_[u].size(); }

    bool has_edge(NodeId u, NodeId v) const {
        const auto& nb = adjacency_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // visits each edge once with u < v
    template <typename F>
    void for_each_edge(F&& f) const {
        for (NodeId u = 0; u < adjacency_.size(); ++u)
            for (NodeId v : adjacency_[u])
                if (u < v) f(u, v);
    }

    EdgeList edges() const {
        EdgeList es;
        es.reserve(edge_count_);
        for_each_edge([&](NodeId u, NodeId v) { es.emplace_back(u, v); });
        return es;
    }

    DegreeDistribution empirical_degree_distribution() const {
        std::vector<std::int64_t> counts;
        for (const auto& nb : adjacency_) {
            if (nb.size() >= counts.size()) counts.resize(nb.size() + 1, 0);
            ++counts[nb.size()];
        }
        return DegreeDistribution::from_counts(counts);
    }

    // One "u v" pair per line, 0-based ids; '#' lines are comments.
    void write_edge_list(std::ostream& out) const {
        out << "# nodes " << node_count() << "\n# edges " << edge_count() << '\n';
        for_each_edge([&](NodeId u, NodeId v) { out << u << ' ' << v << '\n'; });
    }

    static Graph read_edge_list(std::istream& in) {
        EdgeList edges;
        std::size_t n = 0;
        bool n_from_header = false;
        std::string line;
        while (std::getline(in, line)) {
            std::string_view sv = DegreeDistribution::strip_comment(line);
            if (sv.empty()) {
                // "# nodes N" header fixes the node count even when the top
                // ids are isolated
                std::istringstream hdr(line);
                std::string hash, word;
                std::size_t value;
                if (hdr >> hash >> word >> value && hash == "#" && word == "nodes") {
                    n = value;
                    n_from_header = true;
                }
                continue;
            }
            std::istringstream row{std::string(sv)};
            long long u, v;
            if (!(row >> u >> v) || u < 0 || v < 0)
                throw std::runtime_error("bad edge-list row: " + line);
            edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
            if (!n_from_header) n = std::max({n, static_cast<std::size_t>(u) + 1,
                                              static_cast<std::size_t>(v) + 1});
        }
        return from_edges(n, std::move(edges));
    }

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Total-variation distance between a graph's empirical degree distribution
// and a target distribution.
inline double degree_tv_distance(const Graph& g, const DegreeDistribution& target) {
    DegreeDistribution emp = g.empirical_degree_distribution();
    int top = std::max(emp.max_degree(), target.max_degree());
    double tv = 0.0;
    for (int k = 0; k <= top; ++k) tv += std::abs(emp.mass(k) - target.mass(k));
    return tv / 2.0;
}

}  // namespace egonet
