#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "egonet/distribution.hpp"
#include "egonet/graph.hpp"

namespace egonet {

// One surveyed actor: its neighbors (alters) and, optionally, which pairs
// of those neighbors are connected to each other.
struct EgoRecord {
    std::int64_t ego = 0;
    std::vector<std::int64_t> alters;
    std::vector<std::pair<std::int64_t, std::int64_t>> alter_pairs;
};

namespace detail {

// Classifies the alter-connection graph of one record. Each connected
// component of the pair graph must be a complete clique: an isolated alter
// counts toward the single degree, a clique of size s >= 2 contributes
// s*(s-1)/2 to the triangle degree (a connected pair is a triangle with
// ego). Components that are connected but incomplete (e.g. a path a-b-c)
// have no (k1, kdelta) reduction and are reported as invalid.
struct AlterSplit {
    int k1 = 0;
    int kdelta = 0;
};

inline AlterSplit split_alters(const EgoRecord& r) {
    const std::size_t n = r.alters.size();
    std::set<std::int64_t> seen(r.alters.begin(), r.alters.end());
    if (seen.size() != n) throw std::invalid_argument("duplicate alter id in ego record");

    std::map<std::int64_t, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[r.alters[i]] = i;

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::set<std::pair<std::size_t, std::size_t>> pair_set;
    for (const auto& [a, b] : r.alter_pairs) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw std::invalid_argument("alter pair references unknown alter");
        if (a == b) throw std::invalid_argument("alter pair joins an alter with itself");
        std::size_t u = std::min(ia->second, ib->second), v = std::max(ia->second, ib->second);
        if (!pair_set.insert({u, v}).second)
            throw std::invalid_argument("duplicate alter pair");
        parent[find(u)] = find(v);
    }

    std::map<std::size_t, std::pair<int, int>> comp;  // root -> (size, edges)
    for (std::size_t i = 0; i < n; ++i) comp[find(i)].first += 1;
    for (const auto& [u, v] : pair_set) comp[find(u)].second += 1;

    AlterSplit out;
    for (const auto& [root, se] : comp) {
        auto [size, edges] = se;
        if (size == 1) {
            out.k1 += 1;
        } else if (edges == size * (size - 1) / 2) {
            out.kdelta += edges;
        } else {
            throw std::invalid_argument(
                "alter connections of ego " + std::to_string(r.ego) +
                " contain a component that is not a complete clique; the "
                "(single, triangle) degree reduction is not defined for it");
        }
    }
    return out;
}

}  // namespace detail

// Empirical degree distribution from alter counts only.
inline DegreeDistribution ingest_ego_only(std::span<const EgoRecord> records) {
    if (records.empty()) throw std::invalid_argument("no ego records");
    std::vector<std::int64_t> counts;
    for (const auto& r : records) {
        std::set<std::int64_t> seen(r.alters.begin(), r.alters.end());
        if (seen.size() != r.alters.size())
            throw std::invalid_argument("duplicate alter id in ego record");
        if (r.alters.size() >= counts.size()) counts.resize(r.alters.size() + 1, 0);
        ++counts[r.alters.size()];
    }
    return DegreeDistribution::from_counts(counts);
}

struct JointIngestResult {
    JointDegreeDistribution distribution;
    std::size_t skipped = 0;  // records rejected under skip_invalid
};

// Empirical joint (single, triangle) degree distribution. With
// skip_invalid, records whose alter components are not cliques are counted
// and dropped instead of raising.
inline JointIngestResult ingest_alter_connections(std::span<const EgoRecord> records,
                                                  bool skip_invalid = false) {
    if (records.empty()) throw std::invalid_argument("no ego records");
    std::map<std::pair<int, int>, std::int64_t> counts;
    std::size_t skipped = 0;
    for (const auto& r : records) {
        try {
            auto split = detail::split_alters(r);
            ++counts[{split.k1, split.kdelta}];
        } catch (const std::invalid_argument&) {
            if (!skip_invalid) throw;
            ++skipped;
        }
    }
    if (counts.empty()) throw std::invalid_argument("all ego records were rejected");
    return {JointDegreeDistribution::from_counts(counts), skipped};
}

// Treats every node of a graph as a surveyed ego. When with_alter_pairs is
// set, the record lists which pairs of neighbors are adjacent.
inline std::vector<EgoRecord> ego_records_from_graph(const Graph& g, bool with_alter_pairs) {
    std::vector<EgoRecord> records;
    records.reserve(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        EgoRecord r;
        r.ego = u;
        auto nb = g.neighbors(u);
        r.alters.assign(nb.begin(), nb.end());
        if (with_alter_pairs)
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (g.has_edge(nb[i], nb[j])) r.alter_pairs.emplace_back(nb[i], nb[j]);
        records.push_back(std::move(r));
    }
    return records;
}

// Text format, one line per ego:
//   <ego-id> <alter-count> <alter ids...> [<u> <v> pairs...]
// '#' starts a comment.
inline std::vector<EgoRecord> read_ego_records(std::istream& in) {
    std::vector<EgoRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = DegreeDistribution::strip_comment(line);
        if (sv.empty()) continue;
        std::istringstream row{std::string(sv)};
        EgoRecord r;
        std::size_t count;
        if (!(row >> r.ego >> count))
            throw std::runtime_error("bad ego record on line " + std::to_string(lineno));
        r.alters.resize(count);
        for (auto& a : r.alters)
            if (!(row >> a))
                throw std::runtime_error("truncated alter list on line " + std::to_string(lineno));
        std::int64_t u, v;
        while (row >> u) {
            if (!(row >> v))
                throw std::runtime_error("dangling pair id on line " + std::to_string(lineno));
            r.alter_pairs.emplace_back(u, v);
        }
        records.push_back(std::move(r));
    }
    return records;
}

inline void write_ego_records(std::ostream& out, std::span<const EgoRecord> records) {
    out << "# ego alter_count alters... pairs...\n";
    for (const auto& r : records) {
        out << r.ego << ' ' << r.alters.size();
        for (auto a : r.alters) out << ' ' << a;
        for (const auto& [u, v] : r.alter_pairs) out << ' ' << u << ' ' << v;
        out << '\n';
    }
}

}  // namespace egonet
