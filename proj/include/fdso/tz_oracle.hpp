#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fdso/flat_map.hpp"
#include "fdso/graph.hpp"

namespace fdso {

// Stretch-(2k-1) distance oracle for one (sub)graph. Level sets
// A_0 = V >= A_1 >= ... >= A_{k-1} are sampled by independent retention with
// probability n^{-1/k} per step; witness tables hold the nearest level-i
// vertex and its exact distance; bunches map each vertex to the exact
// distances of the centers whose cluster contains it.
struct TzOracle {
    std::uint32_t k = 1;
    std::uint32_t n = 0;
    std::vector<std::vector<Vertex>> levels;        // [k], levels[0] = all of V
    std::vector<std::vector<Vertex>> witness;       // [k][n], kNoVertex if none
    std::vector<std::vector<Weight>> witness_dist;  // [k][n], kInf if none
    std::vector<FlatMap> bunches;                   // [n]

    // Bidirectional level walk; kInf for pairs disconnected in the subgraph.
    Weight query(Vertex u, Vertex v) const;

    std::uint64_t entry_words() const;
};

// Companion spanner: the union of the cluster shortest-path trees, stored as
// base-graph edge ids with a constant-time membership dictionary. Every
// oracle answer is witnessed by a path inside this edge set, so
// d_spanner(u,v) <= query(u,v).
struct TzSpanner {
    std::uint32_t universe = 0;       // edge id space of the source graph
    std::vector<EdgeId> edge_ids;     // sorted
    FlatSet dict;

    bool has_edge(EdgeId e) const;
};

std::pair<TzOracle, TzSpanner> build_tz(const WeightedGraph& g, std::uint32_t k,
                                        std::uint64_t seed);

// Same construction on the subgraph that omits the masked edges. The vertex
// set stays [n]; edge ids keep their base-graph values.
std::pair<TzOracle, TzSpanner> build_tz_masked(const WeightedGraph& g, const EdgeMask* removed,
                                               std::uint32_t k, std::uint64_t seed);

Weight query_tz(const TzOracle& oracle, Vertex u, Vertex v);

bool spanner_has_edge(const TzSpanner& spanner, EdgeId e);

}  // namespace fdso
