#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fdso/graph.hpp"
#include "fdso/tz_oracle.hpp"

namespace fdso {

enum class RpcVariant : std::uint8_t {
    Randomized = 0,
    Deterministic = 1,
};

// Parameters of an (L,f)-replacement-path covering. For the deterministic
// variant, edge ids are encoded as Reed-Solomon codewords over GF(q) with
// message length p and block length ell = q.
struct RpcParams {
    std::uint64_t m = 0;   // edge id universe
    std::uint32_t L = 0;   // hop threshold
    std::uint32_t f = 0;   // sensitivity
    double c = 3.0;        // oversampling constant (randomized variant)
    std::uint32_t q = 0;   // field size, power of two
    std::uint32_t p = 0;   // message length = ceil(log_q m)
    std::uint32_t ell = 0; // block length = q
};

// q = smallest power of two strictly greater than f*L*log_L(m). Validates
// L >= max(f,2), the bound q <= 2fL*log2(m)/log2(L), and the code-distance
// inequality (p-1)*f*L < q.
RpcParams select_params(std::uint64_t m, std::uint32_t L, std::uint32_t f, double c = 3.0);

// Codeword of an edge id: evaluations of its base-q digit polynomial at all
// q field elements in canonical (integer) order.
std::vector<std::uint16_t> rs_codeword(std::uint64_t edge_id, const RpcParams& params);

// Single codeword symbol h_j(edge_id).
std::uint16_t rs_symbol(std::uint64_t edge_id, const RpcParams& params, std::uint32_t j);

// Identifies one subgraph of a covering. Randomized: just the position.
// Deterministic: pair (j, S); the subgraph omits every edge whose j-th
// codeword symbol lies in S.
struct SubgraphIndex {
    std::uint64_t linear = 0;
    std::uint32_t j = 0;
    std::vector<std::uint16_t> symbols;  // sorted; deterministic variant only
};

// Canonical deterministic index order: j ascending, then S by size, then
// lexicographic. Block = all subsets for one j.
std::uint64_t det_block_size(std::uint32_t q, std::uint32_t f);
std::uint64_t det_subset_rank(std::span<const std::uint16_t> subset, std::uint32_t q);
std::vector<std::uint16_t> det_subset_unrank(std::uint64_t rank, std::uint32_t q, std::uint32_t f);
std::uint64_t det_linear_index(std::uint32_t j, std::span<const std::uint16_t> subset,
                               const RpcParams& params);

// Regenerable removal draws: the build discards them, tests and verification
// recompute them from the same inputs.
EdgeMask removal_mask_randomized(std::size_t m, const RpcParams& params, std::uint64_t seed,
                                 std::uint64_t i);
EdgeMask removal_mask_deterministic(const WeightedGraph& g, const RpcParams& params,
                                    std::uint32_t j, std::span<const std::uint16_t> subset);

std::uint64_t randomized_family_count(std::size_t n, const RpcParams& params);

struct BuildLimits {
    std::uint64_t budget_bytes = 2ull << 30;
    std::size_t threads = 0;  // 0 = hardware concurrency
};

struct SizingReport {
    std::uint64_t subgraph_count = 0;
    std::uint64_t est_bytes_per_subgraph = 0;
    std::uint64_t est_total_bytes = 0;
    std::uint64_t budget_bytes = 0;
    std::string text() const;
};

SizingReport estimate_family(const WeightedGraph& g, const RpcParams& params, std::uint32_t k,
                             RpcVariant variant, std::uint64_t budget_bytes);

// A query-ready covering: one distance oracle per subgraph, plus the spanner
// dictionaries in the randomized variant (the deterministic variant recovers
// edge membership from codewords instead).
struct RpcFamily {
    RpcParams params;
    RpcVariant variant = RpcVariant::Deterministic;
    std::uint32_t k = 2;
    std::uint64_t seed = 0;
    std::vector<TzOracle> oracles;
    std::vector<TzSpanner> spanners;  // randomized variant only

    std::uint64_t count() const { return oracles.size(); }
    SubgraphIndex index_at(std::uint64_t linear) const;
    EdgeMask removal_mask(const WeightedGraph& g, std::uint64_t linear) const;
};

RpcFamily build_randomized(const WeightedGraph& g, const RpcParams& params, std::uint32_t k,
                           std::uint64_t seed, const BuildLimits& limits = {});
RpcFamily build_deterministic(const WeightedGraph& g, const RpcParams& params, std::uint32_t k,
                              std::uint64_t seed, const BuildLimits& limits = {});

// Indices of the subgraphs whose spanner contains no edge of F (a superset
// of the subgraphs that avoid F entirely).
std::vector<SubgraphIndex> subfamily_randomized(const RpcFamily& family, const FailureSet& f);

// The ell indices (j, {h_j(e) : e in F}); none of them contains an edge of F.
std::vector<SubgraphIndex> subfamily_deterministic(const RpcParams& params, const FailureSet& f);
std::vector<SubgraphIndex> subfamily_deterministic(const RpcFamily& family, const FailureSet& f);

}  // namespace fdso
