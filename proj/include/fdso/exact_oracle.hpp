#pragma once

#include <cstdint>
#include <optional>

#include "fdso/graph.hpp"

namespace fdso {

struct ExactAnswer {
    Weight distance = kInf;
    std::optional<std::uint32_t> min_hops;  // empty iff distance is infinite
};

// Ground-truth replacement distance d_{G-F}(s,t) plus the minimum hop count
// among shortest s-t paths in G-F. One Dijkstra per call; intentionally slow
// and trusted. Stateless and safe to run in parallel.
ExactAnswer exact_replacement(const WeightedGraph& g, Vertex s, Vertex t, const FailureSet& f);

// True iff some shortest s-t path in G-F has at most L edges.
bool is_hop_short(const WeightedGraph& g, Vertex s, Vertex t, const FailureSet& f, std::uint32_t l);

// True iff x lies on at least one shortest s-t path in G-F, i.e.
// d(s,x,F) + d(x,t,F) = d(s,t,F) with all three finite.
bool pivot_on_some_replacement_path(const WeightedGraph& g, Vertex s, Vertex t,
                                    const FailureSet& f, Vertex x);

}  // namespace fdso
