#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "egonet/distribution.hpp"
#include "egonet/graph.hpp"
#include "egonet/rng.hpp"

namespace egonet {

// What happened while realizing a graph: how many candidate edges were
// erased as self-loops/multi-edges, how many stubs could not be matched
// (pool parity/divisibility remainders), and how many sampled degrees were
// redrawn to repair parity.
struct GenReport {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t erased_edges = 0;
    std::size_t dropped_stubs = 0;
    std::size_t resampled_nodes = 0;
};

struct Generated {
    Graph graph;
    GenReport report;
};

namespace detail {

// inverse-CDF sampler over masses[0..K]
class DiscreteSampler {
public:
    explicit DiscreteSampler(const std::vector<double>& masses) : cdf_(masses) {
        double acc = 0.0;
        for (double& c : cdf_) {
            acc += c;
            c = acc;
        }
        if (!cdf_.empty()) cdf_.back() = 1.0;
    }

    std::size_t operator()(Rng& rng) const {
        double u = rng.unit();
        return static_cast<std::size_t>(
            std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
    }

private:
    std::vector<double> cdf_;
};

inline Generated finalize(std::size_t n, EdgeList edges, GenReport report) {
    std::size_t erased = 0;
    Graph g = Graph::from_edges(n, std::move(edges), &erased);
    report.nodes = n;
    report.edges = g.edge_count();
    report.erased_edges = erased;
    return {std::move(g), report};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Deterministic extremal constructions
// ---------------------------------------------------------------------------

// Disjoint cliques of sizes floor(mu)+1 and ceil(mu)+1 mixed so the mean
// degree is within O(1/n) of mu. Largest component <= ceil(mu)+1, so the
// giant fraction vanishes with n.
inline Generated gen_clique_tiling(std::size_t n, double mu) {
    if (!(mu >= 1.0) || !(mu <= static_cast<double>(n) - 1.0))
        throw std::invalid_argument("clique tiling needs 1 <= mu <= n-1");
    const std::size_t small = static_cast<std::size_t>(std::floor(mu)) + 1;
    const double frac = mu - std::floor(mu);
    std::size_t big_count =
        static_cast<std::size_t>(std::llround(frac * static_cast<double>(n) / (small + 1)));
    big_count = std::min(big_count, n / (small + 1));

    EdgeList edges;
    std::size_t next = 0;
    auto add_clique = [&](std::size_t size) {
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j)
                edges.emplace_back(static_cast<NodeId>(next + i), static_cast<NodeId>(next + j));
        next += size;
    };
    for (std::size_t b = 0; b < big_count; ++b) add_clique(small + 1);
    while (n - next >= small) add_clique(small);
    if (next < n) add_clique(n - next);  // leftover < small nodes form one last clique
    return detail::finalize(n, std::move(edges), {});
}

// All nodes that can afford degree 2 are joined into one path; with only a
// mean degree given this is a path over round(mu n / 2) nodes when mu < 2,
// or a spanning path plus arbitrary extra edges when mu >= 2.
inline Generated gen_line_construction(std::size_t n, double mu) {
    if (!(mu > 0.0) || !(mu <= static_cast<double>(n) - 1.0))
        throw std::invalid_argument("line construction needs 0 < mu <= n-1");
    EdgeList edges;
    if (mu < 2.0) {
        auto path = static_cast<std::size_t>(std::llround(mu * static_cast<double>(n) / 2.0));
        path = std::min(path, n);
        for (std::size_t i = 0; i + 1 < path; ++i)
            edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
    } else {
        for (std::size_t i = 0; i + 1 < n; ++i)
            edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
        auto target = static_cast<std::size_t>(std::llround(mu * static_cast<double>(n) / 2.0));
        std::size_t extra = target > n - 1 ? target - (n - 1) : 0;
        // add chords at increasing stride; all distinct from path edges
        for (std::size_t stride = 2; extra > 0 && stride < n; ++stride)
            for (std::size_t i = 0; i + stride < n && extra > 0; ++i, --extra)
                edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + stride));
    }
    return detail::finalize(n, std::move(edges), {});
}

// Line construction realizing a full degree distribution: degree >= 2 nodes
// form a path, degree-1 nodes hang pendant off spare stubs of the path,
// leftover spare stubs are chorded together, surplus degree-1 nodes are
// paired among themselves.
inline Generated gen_line_construction(std::size_t n, const DegreeDistribution& d) {
    if (d.max_degree() >= static_cast<int>(n))
        throw std::invalid_argument("degree support must be below n");
    // largest-remainder apportionment of n nodes to degrees
    const auto& masses = d.masses();
    std::vector<std::size_t> count(masses.size(), 0);
    std::vector<std::pair<double, int>> remainder;
    std::size_t assigned = 0;
    for (std::size_t k = 0; k < masses.size(); ++k) {
        double exact = masses[k] * static_cast<double>(n);
        count[k] = static_cast<std::size_t>(std::floor(exact));
        assigned += count[k];
        remainder.push_back({exact - std::floor(exact), static_cast<int>(k)});
    }
    std::sort(remainder.begin(), remainder.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t i = 0; assigned < n; ++i, ++assigned) ++count[remainder[i % remainder.size()].second];

    // node ids: path nodes first (descending degree), then degree-1, then isolated
    std::vector<int> degree_of;
    degree_of.reserve(n);
    for (std::size_t k = masses.size(); k-- > 2;)
        degree_of.insert(degree_of.end(), count[k], static_cast<int>(k));
    const std::size_t path_count = degree_of.size();
    const std::size_t ones = count.size() > 1 ? count[1] : 0;
    degree_of.insert(degree_of.end(), ones, 1);

    GenReport report;
    EdgeList edges;
    for (std::size_t i = 0; i + 1 < path_count; ++i)
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));

    // Path ends keep their second stub unmatched (only an O(1/n) degree
    // deficit), so every path node contributes degree-2 spare stubs.
    std::vector<NodeId> spare;
    const int used = path_count >= 2 ? 2 : 0;
    for (std::size_t i = 0; i < path_count; ++i)
        for (int s = degree_of[i] - used; s > 0; --s) spare.push_back(static_cast<NodeId>(i));

    std::size_t next_one = path_count;          // first degree-1 node id
    const std::size_t one_end = path_count + ones;
    std::size_t si = 0;
    for (; si < spare.size() && next_one < one_end; ++si, ++next_one)
        edges.emplace_back(spare[si], static_cast<NodeId>(next_one));
    // surplus degree-1 nodes pair up into 2-node components
    for (; next_one + 1 < one_end; next_one += 2)
        edges.emplace_back(static_cast<NodeId>(next_one), static_cast<NodeId>(next_one + 1));
    if (next_one < one_end) report.dropped_stubs += 1;  // odd one out stays isolated

    // chord remaining spare stubs together, skipping self-pairs and repeats
    std::unordered_set<std::uint64_t> seen;
    for (const auto& [u, v] : edges) seen.insert(static_cast<std::uint64_t>(u) * n + v);
    std::vector<NodeId> pool(spare.begin() + static_cast<std::ptrdiff_t>(si), spare.end());
    std::size_t lo = 0, hi = pool.size();
    while (hi - lo >= 2) {
        NodeId a = pool[lo];
        std::size_t pick = lo + 1;
        while (pick < hi) {
            NodeId b = pool[pick];
            NodeId x = std::min(a, b), y = std::max(a, b);
            bool adjacent_on_path = a != b &&
                                    (a + 1 == b || b + 1 == a);  // path edge already present
            if (a != b && !adjacent_on_path &&
                !seen.count(static_cast<std::uint64_t>(x) * n + y))
                break;
            ++pick;
        }
        if (pick == hi) {
            report.dropped_stubs += hi - lo;
            break;
        }
        NodeId b = pool[pick];
        NodeId x = std::min(a, b), y = std::max(a, b);
        seen.insert(static_cast<std::uint64_t>(x) * n + y);
        edges.emplace_back(x, y);
        std::swap(pool[pick], pool[lo + 1]);
        lo += 2;
    }
    return detail::finalize(n, std::move(edges), report);
}

// floor(mu/2) hub nodes adjacent to every other node, plus one node
// adjacent to a fraction alpha = mu/2 - floor(mu/2) of the remainder. This
// maximizes the major-outbreak size for a given mean degree.
inline Generated gen_starlike(std::size_t n, double mu) {
    if (!(mu > 0.0) || !(mu < static_cast<double>(n)))
        throw std::invalid_argument("starlike construction needs 0 < mu < n");
    const std::size_t hubs = static_cast<std::size_t>(std::floor(mu / 2.0));
    const double alpha = mu / 2.0 - static_cast<double>(hubs);
    const auto partial = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(n)));
    if (hubs + (partial > 0 ? 1 : 0) + partial > n)
        throw std::invalid_argument("starlike construction infeasible at this n");
    EdgeList edges;
    for (std::size_t h = 0; h < hubs; ++h)
        for (std::size_t v = h + 1; v < n; ++v)
            edges.emplace_back(static_cast<NodeId>(h), static_cast<NodeId>(v));
    // the partial hub is the first non-hub node; its targets follow it
    for (std::size_t i = 0; i < partial; ++i)
        edges.emplace_back(static_cast<NodeId>(hubs), static_cast<NodeId>(hubs + 1 + i));
    return detail::finalize(n, std::move(edges), {});
}

// Tiles the population with 9-node components in which every node has
// single degree 2 and triangle degree 1: three disjoint triangles whose
// corners are joined by a 9-cycle of single edges.
inline Generated gen_triangle_cycle_tiling(std::size_t n) {
    if (n == 0 || n % 9 != 0) throw std::invalid_argument("n must be a positive multiple of 9");
    static constexpr int tri[3][2] = {{1, 2}, {4, 5}, {7, 8}};
    static constexpr int cyc[9][2] = {{0, 3}, {3, 6}, {6, 1}, {1, 4}, {4, 7},
                                      {7, 2}, {2, 5}, {5, 8}, {8, 0}};
    EdgeList edges;
    for (std::size_t base = 0; base < n; base += 9) {
        for (int t = 0; t < 3; ++t) {
            int a = 3 * t;
            edges.emplace_back(static_cast<NodeId>(base + a), static_cast<NodeId>(base + tri[t][0]));
            edges.emplace_back(static_cast<NodeId>(base + a), static_cast<NodeId>(base + tri[t][1]));
            edges.emplace_back(static_cast<NodeId>(base + tri[t][0]),
                               static_cast<NodeId>(base + tri[t][1]));
        }
        for (const auto& e : cyc)
            edges.emplace_back(static_cast<NodeId>(base + e[0]), static_cast<NodeId>(base + e[1]));
    }
    return detail::finalize(n, std::move(edges), {});
}

// ---------------------------------------------------------------------------
// Random-network models
// ---------------------------------------------------------------------------

// Erdos-Renyi G(n, m): m distinct edges chosen uniformly at random.
inline Generated gen_er_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("empty node set");
    const double max_edges = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    if (static_cast<double>(m) > max_edges) throw std::invalid_argument("m exceeds n(n-1)/2");
    Rng rng(seed);
    std::unordered_set<std::uint64_t> used;
    used.reserve(m * 2);
    EdgeList edges;
    edges.reserve(m);
    while (edges.size() < m) {
        auto u = static_cast<NodeId>(rng.below(n));
        auto v = static_cast<NodeId>(rng.below(n));
        if (u == v) continue;
        NodeId x = std::min(u, v), y = std::max(u, v);
        if (used.insert(static_cast<std::uint64_t>(x) * n + y).second) edges.emplace_back(x, y);
    }
    return detail::finalize(n, std::move(edges), {});
}

namespace detail {

// i.i.d. degrees with bounded parity repair: resample single nodes until the
// stub total is even, falling back to decrementing one degree when the
// support cannot change parity (all-odd support with odd n).
inline std::vector<int> sample_degrees(std::size_t n, const DegreeDistribution& d, Rng& rng,
                                       GenReport& report) {
    DiscreteSampler sampler(d.masses());
    std::vector<int> degree(n);
    long long total = 0;
    for (auto& k : degree) {
        k = static_cast<int>(sampler(rng));
        total += k;
    }
    for (int tries = 0; total % 2 != 0 && tries < 200; ++tries) {
        auto i = static_cast<std::size_t>(rng.below(n));
        int fresh = static_cast<int>(sampler(rng));
        total += fresh - degree[i];
        degree[i] = fresh;
        ++report.resampled_nodes;
    }
    if (total % 2 != 0) {
        for (auto& k : degree)
            if (k > 0) {
                --k;
                ++report.resampled_nodes;
                break;
            }
    }
    return degree;
}

inline void pair_pool(const std::vector<NodeId>& pool, std::size_t count, EdgeList& edges) {
    for (std::size_t i = 0; i + 1 < count; i += 2) edges.emplace_back(pool[i], pool[i + 1]);
}

}  // namespace detail

// Configuration model: i.i.d. degrees from d, uniform stub matching,
// self-loops and multi-edges erased (their count is in the report).
inline Generated gen_configuration(std::size_t n, const DegreeDistribution& d,
                                   std::uint64_t seed) {
    if (d.max_degree() >= static_cast<int>(n))
        throw std::invalid_argument("degree support must be below n");
    Rng rng(seed);
    GenReport report;
    std::vector<int> degree = detail::sample_degrees(n, d, rng, report);
    std::vector<NodeId> stubs;
    for (std::size_t i = 0; i < n; ++i)
        stubs.insert(stubs.end(), static_cast<std::size_t>(degree[i]), static_cast<NodeId>(i));
    rng.shuffle(stubs);
    EdgeList edges;
    edges.reserve(stubs.size() / 2);
    detail::pair_pool(stubs, stubs.size(), edges);
    return detail::finalize(n, std::move(edges), report);
}

// Two-class correlated model on degrees 2 and 3: each class's stub pool is
// split into a within-class part (fraction r, rounded to an even count) and
// a cross part; cross pools are equalized (surplus cross stubs rejoin their
// within pool, a final odd stub is dropped), then each pool is matched
// uniformly. Class sizes are apportioned deterministically, so for
// balanced stub masses (e.g. p2 = 0.6) the equalization moves only a few
// stubs.
inline Generated gen_two_class_correlated(std::size_t n, double p2, double p3, double r,
                                          std::uint64_t seed) {
    if (!(p2 >= 0.0 && p3 >= 0.0) || std::abs(p2 + p3 - 1.0) > 1e-9)
        throw std::invalid_argument("class fractions must be >= 0 and sum to 1");
    if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("r must lie in [0,1]");
    if (n < 6) throw std::invalid_argument("population too small for the two-class model");
    Rng rng(seed);
    GenReport report;

    const auto n2 = static_cast<std::size_t>(std::llround(p2 * static_cast<double>(n)));
    std::vector<NodeId> stubs2, stubs3;
    for (std::size_t i = 0; i < n2; ++i)
        stubs2.insert(stubs2.end(), 2, static_cast<NodeId>(i));
    for (std::size_t i = n2; i < n; ++i)
        stubs3.insert(stubs3.end(), 3, static_cast<NodeId>(i));
    rng.shuffle(stubs2);
    rng.shuffle(stubs3);

    auto even_near = [](double x) {
        auto v = static_cast<std::size_t>(std::llround(x / 2.0));
        return 2 * v;
    };
    std::size_t w2 = std::min(even_near(r * static_cast<double>(stubs2.size())), stubs2.size());
    std::size_t w3 = std::min(even_near(r * static_cast<double>(stubs3.size())), stubs3.size());
    std::size_t c2 = stubs2.size() - w2, c3 = stubs3.size() - w3;
    if (c2 > c3) {
        std::size_t move = (c2 - c3) / 2 * 2;
        w2 += move;
        c2 -= move;
        if (c2 > c3) {
            --c2;
            ++report.dropped_stubs;
        }
    } else if (c3 > c2) {
        std::size_t move = (c3 - c2) / 2 * 2;
        w3 += move;
        c3 -= move;
        if (c3 > c2) {
            --c3;
            ++report.dropped_stubs;
        }
    }
    if (w2 % 2 == 1) {  // only possible after clamping at tiny n
        --w2;
        ++report.dropped_stubs;
    }
    if (w3 % 2 == 1) {
        --w3;
        ++report.dropped_stubs;
    }

    EdgeList edges;
    edges.reserve((w2 + w3) / 2 + c2);
    detail::pair_pool(stubs2, w2, edges);
    detail::pair_pool(stubs3, w3, edges);
    for (std::size_t i = 0; i < c2; ++i) edges.emplace_back(stubs2[w2 + i], stubs3[w3 + i]);
    return detail::finalize(n, std::move(edges), report);
}

// Clustered configuration model: i.i.d. (k1, kdelta) pairs, uniform
// matching of single stubs, triangle stubs grouped uniformly into triples
// that each contribute three edges. In assortative mode triples only form
// within one (k1, kdelta) class. Pool remainders (odd single stub, triangle
// pools not divisible by 3) are dropped after bounded resampling and
// reported.
inline Generated gen_clustered(std::size_t n, const JointDegreeDistribution& j,
                               bool assortative, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("empty node set");
    Rng rng(seed);
    GenReport report;

    std::vector<double> entry_masses;
    for (const auto& e : j.entries()) entry_masses.push_back(e.p);
    detail::DiscreteSampler sampler(entry_masses);
    std::vector<std::uint32_t> cls(n);
    long long single_total = 0, tri_total = 0;
    auto assign = [&](std::size_t i, std::uint32_t c) {
        const auto& e = j.entries()[c];
        single_total += e.k1;
        tri_total += e.kdelta;
        cls[i] = c;
    };
    auto unassign = [&](std::size_t i) {
        const auto& e = j.entries()[cls[i]];
        single_total -= e.k1;
        tri_total -= e.kdelta;
    };
    for (std::size_t i = 0; i < n; ++i) assign(i, static_cast<std::uint32_t>(sampler(rng)));

    // bounded resampling toward even single stubs and (in random mode)
    // triangle stubs divisible by 3; leftovers are dropped at pool time
    for (int tries = 0; tries < 500; ++tries) {
        bool bad_single = single_total % 2 != 0;
        bool bad_tri = !assortative && tri_total % 3 != 0;
        if (!bad_single && !bad_tri) break;
        auto i = static_cast<std::size_t>(rng.below(n));
        unassign(i);
        assign(i, static_cast<std::uint32_t>(sampler(rng)));
        ++report.resampled_nodes;
    }

    std::vector<NodeId> singles;
    for (std::size_t i = 0; i < n; ++i)
        singles.insert(singles.end(),
                       static_cast<std::size_t>(j.entries()[cls[i]].k1), static_cast<NodeId>(i));
    rng.shuffle(singles);
    if (singles.size() % 2 != 0) ++report.dropped_stubs;

    EdgeList edges;
    detail::pair_pool(singles, singles.size() - singles.size() % 2, edges);

    auto add_triples = [&](std::vector<NodeId>& pool) {
        rng.shuffle(pool);
        std::size_t usable = pool.size() - pool.size() % 3;
        report.dropped_stubs += pool.size() - usable;
        for (std::size_t i = 0; i + 3 <= usable; i += 3) {
            edges.emplace_back(pool[i], pool[i + 1]);
            edges.emplace_back(pool[i + 1], pool[i + 2]);
            edges.emplace_back(pool[i], pool[i + 2]);
        }
    };

    if (!assortative) {
        std::vector<NodeId> pool;
        for (std::size_t i = 0; i < n; ++i)
            pool.insert(pool.end(),
                        static_cast<std::size_t>(j.entries()[cls[i]].kdelta), static_cast<NodeId>(i));
        add_triples(pool);
    } else {
        for (std::uint32_t c = 0; c < j.entries().size(); ++c) {
            std::vector<NodeId> pool;
            for (std::size_t i = 0; i < n; ++i)
                if (cls[i] == c)
                    pool.insert(pool.end(),
                                static_cast<std::size_t>(j.entries()[c].kdelta),
                                static_cast<NodeId>(i));
            if (!pool.empty() && pool.size() < 3)
                throw std::invalid_argument(
                    "assortative mode: a degree class is too small to form a triangle");
            add_triples(pool);
        }
    }
    return detail::finalize(n, std::move(edges), report);
}

}  // namespace egonet
