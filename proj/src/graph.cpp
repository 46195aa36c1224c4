#include "fdso/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "fdso/errors.hpp"

namespace fdso {

WeightedGraph WeightedGraph::from_edges(std::size_t n, std::vector<Edge> edges) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw ArgumentError("edge endpoint out of range");
        if (e.u == e.v)
            throw ArgumentError("self-loops are not allowed");
        if (!(e.w > 0) || !std::isfinite(e.w))
            throw ArgumentError("edge weights must be strictly positive and finite");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.emplace(e.u, e.v).second)
            throw ArgumentError("duplicate edge");
    }

    WeightedGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);

    std::vector<std::uint32_t> degree(n + 1, 0);
    for (const auto& e : g.edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.adj_.resize(g.offsets_[n]);
    std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const Edge& e = g.edges_[id];
        g.adj_[cursor[e.u]++] = {e.v, id};
        g.adj_[cursor[e.v]++] = {e.u, id};
    }
    return g;
}

namespace {
inline std::uint64_t fnv1a(std::uint64_t hash, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
        hash ^= (value >> (8 * i)) & 0xffu;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}
}  // namespace

std::uint64_t WeightedGraph::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, n_);
    h = fnv1a(h, edges_.size());
    for (const auto& e : edges_) {
        h = fnv1a(h, e.u);
        h = fnv1a(h, e.v);
        h = fnv1a(h, std::bit_cast<std::uint64_t>(e.w));
    }
    return h;
}

FailureSet::FailureSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

FailureSet FailureSet::checked(std::vector<EdgeId> ids, const WeightedGraph& g) {
    for (EdgeId id : ids)
        if (!g.valid_edge(id)) throw ArgumentError("failure set contains an invalid edge id");
    return FailureSet(std::move(ids));
}

namespace {

// Heap key: (dist, hops, vertex). Lexicographic order keeps pop order total
// and the settled paths minimum-hop among shortest paths.
struct HeapEntry {
    Weight dist;
    std::uint32_t hops;
    Vertex vertex;
    bool operator>(const HeapEntry& o) const {
        return std::tie(dist, hops, vertex) > std::tie(o.dist, o.hops, o.vertex);
    }
};

template <typename EdgeAllowed>
SsspResult dijkstra_impl(const WeightedGraph& g, Vertex source, EdgeAllowed allowed) {
    const std::size_t n = g.vertex_count();
    SsspResult res;
    res.dist.assign(n, kInf);
    res.hops.assign(n, 0);
    res.parent.assign(n, kNoEdge);

    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    res.dist[source] = 0;
    heap.push({0.0, 0, source});

    std::vector<std::uint8_t> settled(n, 0);
    while (!heap.empty()) {
        const HeapEntry top = heap.top();
        heap.pop();
        if (settled[top.vertex]) continue;
        if (top.dist != res.dist[top.vertex] || top.hops != res.hops[top.vertex]) continue;
        settled[top.vertex] = 1;
        for (const Adjacency& a : g.neighbors(top.vertex)) {
            if (!allowed(a.edge) || settled[a.to]) continue;
            const Weight nd = top.dist + g.edge(a.edge).w;
            const std::uint32_t nh = top.hops + 1;
            if (nd < res.dist[a.to] || (nd == res.dist[a.to] && nh < res.hops[a.to])) {
                res.dist[a.to] = nd;
                res.hops[a.to] = nh;
                res.parent[a.to] = a.edge;
                heap.push({nd, nh, a.to});
            }
        }
    }
    return res;
}

}  // namespace

SsspResult dijkstra(const WeightedGraph& g, Vertex source, const FailureSet& forbidden) {
    if (!g.valid_vertex(source)) throw ArgumentError("dijkstra: source out of range");
    for (EdgeId id : forbidden.ids())
        if (!g.valid_edge(id)) throw ArgumentError("dijkstra: forbidden edge id out of range");
    if (forbidden.empty())
        return dijkstra_impl(g, source, [](EdgeId) { return true; });
    return dijkstra_impl(g, source, [&forbidden](EdgeId e) { return !forbidden.contains(e); });
}

SsspResult dijkstra_masked(const WeightedGraph& g, Vertex source, const EdgeMask& removed) {
    if (!g.valid_vertex(source)) throw ArgumentError("dijkstra: source out of range");
    return dijkstra_impl(g, source, [&removed](EdgeId e) { return !removed[e]; });
}

MultiSourceResult dijkstra_multi(const WeightedGraph& g, std::span<const Vertex> sources,
                                 const EdgeMask* removed) {
    const std::size_t n = g.vertex_count();
    MultiSourceResult res;
    res.dist.assign(n, kInf);
    res.hops.assign(n, 0);
    res.witness.assign(n, kNoVertex);

    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    std::vector<Vertex> sorted(sources.begin(), sources.end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex s : sorted) {
        res.dist[s] = 0;
        res.witness[s] = s;
        heap.push({0.0, 0, s});
    }

    std::vector<std::uint8_t> settled(n, 0);
    while (!heap.empty()) {
        const HeapEntry top = heap.top();
        heap.pop();
        if (settled[top.vertex]) continue;
        if (top.dist != res.dist[top.vertex] || top.hops != res.hops[top.vertex]) continue;
        settled[top.vertex] = 1;
        for (const Adjacency& a : g.neighbors(top.vertex)) {
            if ((removed && (*removed)[a.edge]) || settled[a.to]) continue;
            const Weight nd = top.dist + g.edge(a.edge).w;
            const std::uint32_t nh = top.hops + 1;
            if (nd < res.dist[a.to] || (nd == res.dist[a.to] && nh < res.hops[a.to])) {
                res.dist[a.to] = nd;
                res.hops[a.to] = nh;
                res.witness[a.to] = res.witness[top.vertex];
                heap.push({nd, nh, a.to});
            }
        }
    }
    return res;
}

std::uint32_t hop_diameter(const WeightedGraph& g) {
    std::uint32_t best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        const SsspResult r = dijkstra(g, s);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (r.dist[v] != kInf && r.hops[v] > best) best = r.hops[v];
    }
    return best;
}

namespace {

std::string_view next_line(std::string_view& text) {
    const std::size_t pos = text.find('\n');
    std::string_view line = text.substr(0, pos);
    text = pos == std::string_view::npos ? std::string_view{} : text.substr(pos + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

bool is_blank_or_comment(std::string_view line) {
    const std::size_t i = line.find_first_not_of(" \t");
    return i == std::string_view::npos || line[i] == '#';
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

WeightedGraph load_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;

    while (!text.empty()) {
        std::string_view line = next_line(text);
        ++line_no;
        if (is_blank_or_comment(line)) continue;

        std::istringstream in{std::string(line)};
        if (!have_header) {
            long long hn = -1, hm = -1;
            if (!(in >> hn >> hm) || hn < 0 || hm < 0)
                parse_fail(line_no, "expected header \"n m\"");
            n = static_cast<std::size_t>(hn);
            m = static_cast<std::size_t>(hm);
            have_header = true;
            edges.reserve(m);
            continue;
        }
        long long u = -1, v = -1;
        double w = 0;
        if (!(in >> u >> v >> w))
            parse_fail(line_no, "expected edge \"u v w\"");
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            parse_fail(line_no, "vertex id out of range");
        if (u == v)
            parse_fail(line_no, "self-loop");
        if (!(w > 0) || !std::isfinite(w))
            parse_fail(line_no, "non-positive weight");
        if (edges.size() == m)
            parse_fail(line_no, "more edges than declared");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    }

    if (!have_header) throw ParseError("line 1: missing header");
    if (edges.size() != m)
        throw ParseError("declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    try {
        return WeightedGraph::from_edges(n, std::move(edges));
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

namespace {
std::string format_weight(Weight w) {
    std::array<char, 40> buf;
    const int len = std::snprintf(buf.data(), buf.size(), "%.17g", w);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}
}  // namespace

std::string serialize_graph(const WeightedGraph& g) {
    std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : sorted) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += ' ';
        out += format_weight(e.w);
        out += '\n';
    }
    return out;
}

bool weight_range_is_polynomial(const WeightedGraph& g, double c) {
    if (g.edge_count() == 0) return true;
    Weight lo = kInf, hi = 0;
    for (const Edge& e : g.edges()) {
        lo = std::min(lo, e.w);
        hi = std::max(hi, e.w);
    }
    const double n = static_cast<double>(std::max<std::size_t>(g.vertex_count(), 2));
    return hi / lo <= std::pow(n, c);
}

}  // namespace fdso
