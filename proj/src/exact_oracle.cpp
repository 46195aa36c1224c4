#include "fdso/exact_oracle.hpp"

#include "fdso/errors.hpp"

namespace fdso {

namespace {
void check_pair(const WeightedGraph& g, Vertex s, Vertex t) {
    if (!g.valid_vertex(s) || !g.valid_vertex(t))
        throw ArgumentError("vertex id out of range");
}
}  // namespace

ExactAnswer exact_replacement(const WeightedGraph& g, Vertex s, Vertex t, const FailureSet& f) {
    check_pair(g, s, t);
    const SsspResult r = dijkstra(g, s, f);
    ExactAnswer ans;
    ans.distance = r.dist[t];
    if (ans.distance != kInf) ans.min_hops = r.hops[t];
    return ans;
}

bool is_hop_short(const WeightedGraph& g, Vertex s, Vertex t, const FailureSet& f,
                  std::uint32_t l) {
    const ExactAnswer ans = exact_replacement(g, s, t, f);
    return ans.min_hops.has_value() && *ans.min_hops <= l;
}

bool pivot_on_some_replacement_path(const WeightedGraph& g, Vertex s, Vertex t,
                                    const FailureSet& f, Vertex x) {
    check_pair(g, s, t);
    if (!g.valid_vertex(x)) throw ArgumentError("vertex id out of range");
    const SsspResult from_s = dijkstra(g, s, f);
    if (from_s.dist[t] == kInf || from_s.dist[x] == kInf) return false;
    const SsspResult from_x = dijkstra(g, x, f);
    return from_s.dist[x] + from_x.dist[t] == from_s.dist[t];
}

}  // namespace fdso
