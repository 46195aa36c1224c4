#include "fdso/tz_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "fdso/errors.hpp"
#include "fdso/rng.hpp"

namespace fdso {

namespace {

constexpr int kEmptyLevelRetries = 32;

std::vector<std::vector<Vertex>> sample_levels(std::size_t n, std::uint32_t k, std::uint64_t seed) {
    std::vector<std::vector<Vertex>> levels(k);
    levels[0].resize(n);
    for (std::size_t v = 0; v < n; ++v) levels[0][v] = static_cast<Vertex>(v);
    if (k == 1 || n == 0) return levels;

    const double keep = std::pow(static_cast<double>(n), -1.0 / static_cast<double>(k));
    Rng rng(derive_seed(seed, 0x747a /* level sampling stream */));
    for (std::uint32_t i = 1; i < k; ++i) {
        if (levels[i - 1].empty()) break;
        for (int attempt = 0; attempt < kEmptyLevelRetries; ++attempt) {
            levels[i].clear();
            for (Vertex v : levels[i - 1])
                if (rng.bernoulli(keep)) levels[i].push_back(v);
            if (!levels[i].empty()) break;
        }
    }
    return levels;
}

struct HeapEntry {
    Weight dist;
    std::uint32_t hops;
    Vertex vertex;
    bool operator>(const HeapEntry& o) const {
        return std::tie(dist, hops, vertex) > std::tie(o.dist, o.hops, o.vertex);
    }
};

// Truncated Dijkstra from `center`: vertex v is explored only while
// d(center,v) < bound[v]. With bound = d(A_{i+1}, .) this visits exactly the
// cluster of `center` and records its shortest-path tree.
struct ClusterScratch {
    std::vector<Weight> dist;
    std::vector<std::uint32_t> hops;
    std::vector<EdgeId> parent;
    std::vector<std::uint8_t> settled;
    std::vector<Vertex> touched;

    explicit ClusterScratch(std::size_t n)
        : dist(n, kInf), hops(n, 0), parent(n, kNoEdge), settled(n, 0) {}

    void reset() {
        for (Vertex v : touched) {
            dist[v] = kInf;
            hops[v] = 0;
            parent[v] = kNoEdge;
            settled[v] = 0;
        }
        touched.clear();
    }
};

template <typename Visit>
void run_cluster(const WeightedGraph& g, const EdgeMask* removed, Vertex center,
                 const std::vector<Weight>* bound, ClusterScratch& scratch, Visit visit) {
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    scratch.dist[center] = 0;
    scratch.touched.push_back(center);
    heap.push({0.0, 0, center});

    while (!heap.empty()) {
        const HeapEntry top = heap.top();
        heap.pop();
        if (scratch.settled[top.vertex]) continue;
        if (top.dist != scratch.dist[top.vertex] || top.hops != scratch.hops[top.vertex]) continue;
        scratch.settled[top.vertex] = 1;
        visit(top.vertex, top.dist, scratch.parent[top.vertex]);
        for (const Adjacency& a : g.neighbors(top.vertex)) {
            if ((removed && (*removed)[a.edge]) || scratch.settled[a.to]) continue;
            const Weight nd = top.dist + g.edge(a.edge).w;
            if (bound && nd >= (*bound)[a.to]) continue;
            const std::uint32_t nh = top.hops + 1;
            if (nd < scratch.dist[a.to] || (nd == scratch.dist[a.to] && nh < scratch.hops[a.to])) {
                if (scratch.dist[a.to] == kInf) scratch.touched.push_back(a.to);
                scratch.dist[a.to] = nd;
                scratch.hops[a.to] = nh;
                scratch.parent[a.to] = a.edge;
                heap.push({nd, nh, a.to});
            }
        }
    }
}

}  // namespace

std::pair<TzOracle, TzSpanner> build_tz_masked(const WeightedGraph& g, const EdgeMask* removed,
                                               std::uint32_t k, std::uint64_t seed) {
    if (k < 1) throw ArgumentError("stretch parameter k must be at least 1");
    const std::size_t n = g.vertex_count();

    TzOracle oracle;
    oracle.k = k;
    oracle.n = static_cast<std::uint32_t>(n);
    oracle.levels = sample_levels(n, k, seed);
    oracle.witness.assign(k, std::vector<Vertex>(n, kNoVertex));
    oracle.witness_dist.assign(k, std::vector<Weight>(n, kInf));

    // Level 0: every vertex witnesses itself at distance 0.
    for (std::size_t v = 0; v < n; ++v) {
        oracle.witness[0][v] = static_cast<Vertex>(v);
        oracle.witness_dist[0][v] = 0;
    }
    for (std::uint32_t i = 1; i < k; ++i) {
        if (oracle.levels[i].empty()) continue;
        const MultiSourceResult ms = dijkstra_multi(g, oracle.levels[i], removed);
        oracle.witness[i] = ms.witness;
        oracle.witness_dist[i] = ms.dist;
    }
    // Consistent witnesses: when a level brings no improvement, reuse the
    // higher level's vertex. Keeps every witness inside the bunch of the
    // vertex it serves, which is what the spanner path argument needs.
    for (std::uint32_t i = k - 1; i-- > 0;) {
        for (std::size_t v = 0; v < n; ++v) {
            if (oracle.witness[i + 1][v] != kNoVertex &&
                oracle.witness_dist[i][v] == oracle.witness_dist[i + 1][v])
                oracle.witness[i][v] = oracle.witness[i + 1][v];
        }
    }

    // Top level of each vertex; clusters are grown from each vertex at its
    // top level, bounded by the next level's distances.
    std::vector<std::uint32_t> top_level(n, 0);
    for (std::uint32_t i = 1; i < k; ++i)
        for (Vertex v : oracle.levels[i]) top_level[v] = i;

    std::vector<std::vector<std::pair<std::uint32_t, double>>> bunch_entries(n);
    std::vector<std::uint8_t> in_spanner(g.edge_count(), 0);
    std::vector<EdgeId> spanner_edges;

    ClusterScratch scratch(n);
    for (Vertex center = 0; center < n; ++center) {
        const std::uint32_t level = top_level[center];
        const std::vector<Weight>* bound =
            level + 1 < k ? &oracle.witness_dist[level + 1] : nullptr;
        scratch.reset();
        run_cluster(g, removed, center, bound, scratch,
                    [&](Vertex v, Weight dist, EdgeId parent_edge) {
                        bunch_entries[v].emplace_back(center, dist);
                        if (parent_edge != kNoEdge && !in_spanner[parent_edge]) {
                            in_spanner[parent_edge] = 1;
                            spanner_edges.push_back(parent_edge);
                        }
                    });
    }

    oracle.bunches.reserve(n);
    for (std::size_t v = 0; v < n; ++v) oracle.bunches.emplace_back(bunch_entries[v]);

    std::sort(spanner_edges.begin(), spanner_edges.end());
    TzSpanner spanner;
    spanner.universe = static_cast<std::uint32_t>(g.edge_count());
    spanner.dict = FlatSet(spanner_edges);
    spanner.edge_ids = std::move(spanner_edges);
    return {std::move(oracle), std::move(spanner)};
}

std::pair<TzOracle, TzSpanner> build_tz(const WeightedGraph& g, std::uint32_t k,
                                        std::uint64_t seed) {
    return build_tz_masked(g, nullptr, k, seed);
}

Weight TzOracle::query(Vertex u, Vertex v) const {
    if (u >= n || v >= n) throw ArgumentError("query vertex out of range");
    if (u == v) return 0;

    Vertex x = u, y = v;
    Vertex w = witness[0][x];  // = x
    for (std::uint32_t i = 0;;) {
        if (const double* d = bunches[y].find(w))
            return witness_dist[i][x] + *d;
        if (++i == k) return kInf;
        std::swap(x, y);
        w = witness[i][x];
        if (w == kNoVertex) return kInf;
    }
}

std::uint64_t TzOracle::entry_words() const {
    std::uint64_t words = 0;
    for (const auto& level : levels) words += level.size();
    words += 2ull * k * n;  // witness vertex + distance per level
    for (const auto& bunch : bunches) words += 2ull * bunch.size();
    return words;
}

bool TzSpanner::has_edge(EdgeId e) const {
    if (e >= universe) throw ArgumentError("edge id outside the source graph");
    return dict.contains(e);
}

Weight query_tz(const TzOracle& oracle, Vertex u, Vertex v) { return oracle.query(u, v); }

bool spanner_has_edge(const TzSpanner& spanner, EdgeId e) { return spanner.has_edge(e); }

}  // namespace fdso
