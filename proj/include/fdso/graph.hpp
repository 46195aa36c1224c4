#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fdso {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = double;

inline constexpr Weight kInf = std::numeric_limits<Weight>::infinity();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Edge {
    Vertex u;
    Vertex v;
    Weight w;
};

struct Adjacency {
    Vertex to;
    EdgeId edge;
};

// Undirected graph with stable edge ids and strictly positive weights.
// Immutable once constructed; concurrent reads are safe.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Validates: ids in range, no self-loops, no duplicate unordered pairs,
    // weights strictly positive and finite. Edge ids are assigned by input
    // position and endpoints are normalized to u < v.
    static WeightedGraph from_edges(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const Edge& edge(EdgeId id) const { return edges_[id]; }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Adjacency> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool valid_vertex(Vertex v) const { return v < n_; }
    bool valid_edge(EdgeId e) const { return e < edges_.size(); }

    // FNV-1a over (n, m, normalized edge list); identifies the graph a
    // serialized oracle was built for.
    std::uint64_t fingerprint() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_;
    std::vector<Adjacency> adj_;
};

// Sorted duplicate-free set of failing edge ids. A view over the graph's id
// space; never mutates the graph.
class FailureSet {
public:
    FailureSet() = default;
    explicit FailureSet(std::vector<EdgeId> ids);

    // Additionally validates ids against g.
    static FailureSet checked(std::vector<EdgeId> ids, const WeightedGraph& g);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    std::span<const EdgeId> ids() const { return ids_; }

    bool contains(EdgeId e) const {
        for (EdgeId id : ids_)
            if (id == e) return true;
        return false;
    }

private:
    std::vector<EdgeId> ids_;
};

struct SsspResult {
    std::vector<Weight> dist;          // kInf when unreachable
    std::vector<std::uint32_t> hops;   // edge count of the recorded path
    std::vector<EdgeId> parent;        // kNoEdge for source/unreachable
};

// 1 = edge removed. Indexed by edge id of the base graph.
using EdgeMask = std::vector<std::uint8_t>;

// Single-source shortest paths avoiding the forbidden edges. Priority order
// is (weight, hops, vertex id), so the recorded path per vertex is the
// minimum-hop shortest path and runs are reproducible.
SsspResult dijkstra(const WeightedGraph& g, Vertex source, const FailureSet& forbidden = {});

// Same, but edges flagged in `removed` are skipped. Used for the covering
// subgraphs, whose removal sets are large.
SsspResult dijkstra_masked(const WeightedGraph& g, Vertex source, const EdgeMask& removed);

struct MultiSourceResult {
    std::vector<Weight> dist;
    std::vector<std::uint32_t> hops;
    std::vector<Vertex> witness;  // nearest source, kNoVertex if unreachable
};

// Distance from each vertex to its nearest source, with the attaining source.
MultiSourceResult dijkstra_multi(const WeightedGraph& g, std::span<const Vertex> sources,
                                 const EdgeMask* removed = nullptr);

// Max over reachable ordered pairs of the minimum-hop count of a shortest
// path; the upper-bound witness used for parameter selection.
std::uint32_t hop_diameter(const WeightedGraph& g);

// Text format: first line "n m", then m lines "u v w" (0-based ids, u != v,
// w positive). '#' starts a comment line. Edge id = data line order.
WeightedGraph load_graph(std::string_view text);
WeightedGraph load_graph_file(const std::string& path);

// Canonical form: endpoints u < v, edges sorted by (u, v).
std::string serialize_graph(const WeightedGraph& g);

// Advisory check that max/min weight <= n^c.
bool weight_range_is_polynomial(const WeightedGraph& g, double c = 4.0);

}  // namespace fdso
