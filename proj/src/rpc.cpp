#include "fdso/rpc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fdso/errors.hpp"
#include "fdso/gf.hpp"
#include "fdso/parallel.hpp"
#include "fdso/rng.hpp"

namespace fdso {

namespace {

constexpr std::uint64_t kCountCap = 1ull << 62;

// Binomial coefficient, saturating at kCountCap.
std::uint64_t binom(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        if (result > kCountCap / (n - r + i)) return kCountCap;
        result = result * (n - r + i) / i;
    }
    return std::min(result, kCountCap);
}

// log_L(m), exact when m is an integer power of L.
double log_base(std::uint64_t m, std::uint32_t base) {
    const double approx = std::log(static_cast<double>(m)) / std::log(static_cast<double>(base));
    const double rounded = std::round(approx);
    if (rounded >= 0 && rounded <= 64) {
        std::uint64_t power = 1;
        bool overflow = false;
        for (int i = 0; i < static_cast<int>(rounded); ++i) {
            if (power > m) { overflow = true; break; }
            power *= base;
        }
        if (!overflow && power == m) return rounded;
    }
    return approx;
}

std::uint64_t seed_stream_mask(std::uint64_t seed, std::uint64_t i) {
    return derive_seed(seed, 0x6d61736bULL /* mask stream */, i);
}
std::uint64_t seed_stream_oracle(std::uint64_t seed, std::uint64_t i) {
    return derive_seed(seed, 0x6f7261ULL /* oracle stream */, i);
}

}  // namespace

RpcParams select_params(std::uint64_t m, std::uint32_t L, std::uint32_t f, double c) {
    if (f < 1) throw ArgumentError("sensitivity f must be at least 1");
    if (L < std::max(f, 2u)) throw ArgumentError("hop threshold L must be at least max(f, 2)");
    if (m < 2) throw ArgumentError("graph must have at least 2 edges");
    if (!(c > 0)) throw ArgumentError("oversampling constant must be positive");

    const double threshold = static_cast<double>(f) * L * log_base(m, L);
    const GfField& field = GfField::with_order_above(static_cast<std::uint64_t>(threshold));
    std::uint32_t q = field.order();
    // with_order_above is strict on the integer floor; enforce strictness on
    // the real value too.
    while (static_cast<double>(q) <= threshold) q <<= 1;
    if (q > (1u << 16))
        throw BudgetError("field size exceeds 2^16",
                          "selected q > 65536; shrink L, f, or the graph");

    RpcParams params;
    params.m = m;
    params.L = L;
    params.f = f;
    params.c = c;
    params.q = q;
    params.ell = q;
    params.p = 1;
    std::uint64_t cap = q;
    while (cap < m) {
        cap *= q;
        ++params.p;
    }

    const double upper = 2.0 * f * L * std::log2(static_cast<double>(m)) /
                         std::log2(static_cast<double>(L));
    if (static_cast<double>(q) > upper * (1.0 + 1e-9))
        throw ArgumentError("selected field size violates its upper bound");
    if (static_cast<std::uint64_t>(params.p - 1) * f * L >= q)
        throw ArgumentError("code distance too small for the requested covering");
    return params;
}

std::vector<std::uint16_t> rs_codeword(std::uint64_t edge_id, const RpcParams& params) {
    if (edge_id >= params.m) throw ArgumentError("edge id out of range");
    const GfField& field = GfField::with_bits(static_cast<unsigned>(std::countr_zero(params.q)));

    // Base-q digits = blocks of log2(q) bits of the id.
    std::vector<std::uint16_t> digits(params.p);
    for (std::uint32_t j = 0; j < params.p; ++j)
        digits[j] = static_cast<std::uint16_t>((edge_id >> (j * field.bits())) & (params.q - 1));

    std::vector<std::uint16_t> codeword(params.ell);
    for (std::uint32_t x = 0; x < params.ell; ++x)
        codeword[x] = field.eval_poly(digits, static_cast<std::uint16_t>(x));
    return codeword;
}

std::uint16_t rs_symbol(std::uint64_t edge_id, const RpcParams& params, std::uint32_t j) {
    if (edge_id >= params.m) throw ArgumentError("edge id out of range");
    if (j >= params.ell) throw ArgumentError("column index out of range");
    const GfField& field = GfField::with_bits(static_cast<unsigned>(std::countr_zero(params.q)));
    std::vector<std::uint16_t> digits(params.p);
    for (std::uint32_t d = 0; d < params.p; ++d)
        digits[d] = static_cast<std::uint16_t>((edge_id >> (d * field.bits())) & (params.q - 1));
    return field.eval_poly(digits, static_cast<std::uint16_t>(j));
}

std::uint64_t det_block_size(std::uint32_t q, std::uint32_t f) {
    std::uint64_t total = 0;
    for (std::uint32_t a = 0; a <= f; ++a) {
        total += binom(q, a);
        if (total >= kCountCap) return kCountCap;
    }
    return total;
}

std::uint64_t det_subset_rank(std::span<const std::uint16_t> subset, std::uint32_t q) {
    // Lexicographic rank among sorted |subset|-subsets of [q], via the
    // hockey-stick identity.
    const std::size_t a = subset.size();
    std::uint64_t rank = 0;
    std::uint32_t prev = 0;  // exclusive lower bound + 1 handled below
    for (std::size_t i = 0; i < a; ++i) {
        const std::uint32_t s = subset[i];
        const std::uint64_t t = a - 1 - i;
        rank += binom(q - prev, t + 1) - binom(q - s, t + 1);
        prev = s + 1;
    }
    return rank;
}

std::vector<std::uint16_t> det_subset_unrank(std::uint64_t rank, std::uint32_t q,
                                             std::uint32_t f) {
    // Size class first (subsets ordered by size, then lexicographic).
    std::uint32_t a = 0;
    while (a <= f) {
        const std::uint64_t cnt = binom(q, a);
        if (rank < cnt) break;
        rank -= cnt;
        ++a;
    }
    if (a > f) throw ArgumentError("subset rank out of range");

    std::vector<std::uint16_t> subset(a);
    std::uint32_t x = 0;
    for (std::uint32_t i = 0; i < a; ++i) {
        while (true) {
            const std::uint64_t cnt = binom(q - 1 - x, a - 1 - i);
            if (rank < cnt) break;
            rank -= cnt;
            ++x;
        }
        subset[i] = static_cast<std::uint16_t>(x);
        ++x;
    }
    return subset;
}

std::uint64_t det_linear_index(std::uint32_t j, std::span<const std::uint16_t> subset,
                               const RpcParams& params) {
    std::uint64_t offset = 0;
    for (std::size_t a = 0; a < subset.size(); ++a) offset += binom(params.q, a);
    return static_cast<std::uint64_t>(j) * det_block_size(params.q, params.f) + offset +
           det_subset_rank(subset, params.q);
}

EdgeMask removal_mask_randomized(std::size_t m, const RpcParams& params, std::uint64_t seed,
                                 std::uint64_t i) {
    EdgeMask mask(m, 0);
    Rng rng(seed_stream_mask(seed, i));
    const double rate = 1.0 / static_cast<double>(params.L);
    for (std::size_t e = 0; e < m; ++e) mask[e] = rng.bernoulli(rate) ? 1 : 0;
    return mask;
}

EdgeMask removal_mask_deterministic(const WeightedGraph& g, const RpcParams& params,
                                    std::uint32_t j, std::span<const std::uint16_t> subset) {
    EdgeMask mask(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const std::uint16_t sym = rs_symbol(e, params, j);
        for (std::uint16_t s : subset)
            if (s == sym) {
                mask[e] = 1;
                break;
            }
    }
    return mask;
}

std::uint64_t randomized_family_count(std::size_t n, const RpcParams& params) {
    const double count = params.c * params.f *
                         std::pow(static_cast<double>(params.L), params.f) *
                         std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(count)));
}

std::string SizingReport::text() const {
    std::ostringstream out;
    out << "subgraphs: " << subgraph_count
        << ", est bytes/subgraph: " << est_bytes_per_subgraph
        << ", est total: " << est_total_bytes << " bytes, budget: " << budget_bytes << " bytes";
    return out.str();
}

SizingReport estimate_family(const WeightedGraph& g, const RpcParams& params, std::uint32_t k,
                             RpcVariant variant, std::uint64_t budget_bytes) {
    SizingReport report;
    report.budget_bytes = budget_bytes;
    if (variant == RpcVariant::Deterministic) {
        const std::uint64_t block = det_block_size(params.q, params.f);
        report.subgraph_count =
            block >= kCountCap ? kCountCap : static_cast<std::uint64_t>(params.ell) * block;
    } else {
        report.subgraph_count = randomized_family_count(g.vertex_count(), params);
    }

    const double n = static_cast<double>(std::max<std::size_t>(g.vertex_count(), 2));
    const double bunch_entries = k * std::pow(n, 1.0 + 1.0 / k);
    double words = 2.0 * k * n + 4.0 * bunch_entries;  // witness tables + bunches with slack
    if (variant == RpcVariant::Randomized) words += 2.0 * bunch_entries;  // spanner + dict
    report.est_bytes_per_subgraph = static_cast<std::uint64_t>(words * 8.0) + 256;

    const double total =
        static_cast<double>(report.subgraph_count) * static_cast<double>(report.est_bytes_per_subgraph);
    report.est_total_bytes =
        total > static_cast<double>(kCountCap) ? kCountCap : static_cast<std::uint64_t>(total);
    return report;
}

namespace {
void enforce_budget(const SizingReport& report) {
    if (report.est_total_bytes > report.budget_bytes)
        throw BudgetError("estimated family size exceeds the memory budget", report.text());
}
}  // namespace

SubgraphIndex RpcFamily::index_at(std::uint64_t linear) const {
    if (linear >= count()) throw ArgumentError("subgraph index out of range");
    SubgraphIndex idx;
    idx.linear = linear;
    if (variant == RpcVariant::Deterministic) {
        const std::uint64_t block = det_block_size(params.q, params.f);
        idx.j = static_cast<std::uint32_t>(linear / block);
        idx.symbols = det_subset_unrank(linear % block, params.q, params.f);
    }
    return idx;
}

EdgeMask RpcFamily::removal_mask(const WeightedGraph& g, std::uint64_t linear) const {
    if (variant == RpcVariant::Deterministic) {
        const SubgraphIndex idx = index_at(linear);
        return removal_mask_deterministic(g, params, idx.j, idx.symbols);
    }
    return removal_mask_randomized(g.edge_count(), params, seed, linear);
}

RpcFamily build_randomized(const WeightedGraph& g, const RpcParams& params, std::uint32_t k,
                           std::uint64_t seed, const BuildLimits& limits) {
    if (k < 1) throw ArgumentError("stretch parameter k must be at least 1");
    const SizingReport report = estimate_family(g, params, k, RpcVariant::Randomized,
                                                limits.budget_bytes);
    enforce_budget(report);

    RpcFamily family;
    family.params = params;
    family.variant = RpcVariant::Randomized;
    family.k = k;
    family.seed = seed;
    const std::uint64_t r = report.subgraph_count;
    family.oracles.resize(r);
    family.spanners.resize(r);
    parallel_for(r, limits.threads, [&](std::size_t i) {
        const EdgeMask mask = removal_mask_randomized(g.edge_count(), params, seed, i);
        auto [oracle, spanner] = build_tz_masked(g, &mask, k, seed_stream_oracle(seed, i));
        family.oracles[i] = std::move(oracle);
        family.spanners[i] = std::move(spanner);
        // Removal draws go out of scope here; only oracle + spanner are kept.
    });
    return family;
}

RpcFamily build_deterministic(const WeightedGraph& g, const RpcParams& params, std::uint32_t k,
                              std::uint64_t seed, const BuildLimits& limits) {
    if (k < 1) throw ArgumentError("stretch parameter k must be at least 1");
    const SizingReport report = estimate_family(g, params, k, RpcVariant::Deterministic,
                                                limits.budget_bytes);
    enforce_budget(report);

    // Column table: symbol h_j(e) for every edge and column.
    std::vector<std::vector<std::uint16_t>> columns(params.ell,
                                                    std::vector<std::uint16_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const std::vector<std::uint16_t> codeword = rs_codeword(e, params);
        for (std::uint32_t j = 0; j < params.ell; ++j) columns[j][e] = codeword[j];
    }

    RpcFamily family;
    family.params = params;
    family.variant = RpcVariant::Deterministic;
    family.k = k;
    family.seed = seed;
    const std::uint64_t block = det_block_size(params.q, params.f);
    const std::uint64_t total = report.subgraph_count;
    family.oracles.resize(total);
    parallel_for(total, limits.threads, [&](std::size_t linear) {
        const std::uint32_t j = static_cast<std::uint32_t>(linear / block);
        const std::vector<std::uint16_t> subset =
            det_subset_unrank(linear % block, params.q, params.f);
        EdgeMask mask(g.edge_count(), 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const std::uint16_t sym = columns[j][e];
            for (std::uint16_t s : subset)
                if (s == sym) {
                    mask[e] = 1;
                    break;
                }
        }
        auto [oracle, spanner] = build_tz_masked(g, &mask, k, seed_stream_oracle(seed, linear));
        family.oracles[linear] = std::move(oracle);
        // Deterministic variant: spanner not needed, membership is recomputed
        // from codewords.
    });
    return family;
}

std::vector<SubgraphIndex> subfamily_randomized(const RpcFamily& family, const FailureSet& f) {
    if (family.variant != RpcVariant::Randomized)
        throw ArgumentError("family is not randomized");
    std::vector<SubgraphIndex> out;
    for (std::uint64_t i = 0; i < family.count(); ++i) {
        bool hit = false;
        for (EdgeId e : f.ids())
            if (family.spanners[i].dict.contains(e)) {
                hit = true;
                break;
            }
        if (!hit) out.push_back(SubgraphIndex{i, 0, {}});
    }
    return out;
}

std::vector<SubgraphIndex> subfamily_deterministic(const RpcParams& params, const FailureSet& f) {
    if (f.size() > params.f) throw ArgumentError("failure set larger than sensitivity");
    std::vector<std::vector<std::uint16_t>> failed_codewords;
    failed_codewords.reserve(f.size());
    for (EdgeId e : f.ids()) failed_codewords.push_back(rs_codeword(e, params));

    std::vector<SubgraphIndex> out;
    out.reserve(params.ell);
    for (std::uint32_t j = 0; j < params.ell; ++j) {
        SubgraphIndex idx;
        idx.j = j;
        idx.symbols.reserve(f.size());
        for (const auto& cw : failed_codewords) idx.symbols.push_back(cw[j]);
        std::sort(idx.symbols.begin(), idx.symbols.end());
        idx.symbols.erase(std::unique(idx.symbols.begin(), idx.symbols.end()), idx.symbols.end());
        idx.linear = det_linear_index(j, idx.symbols, params);
        out.push_back(std::move(idx));
    }
    return out;
}

std::vector<SubgraphIndex> subfamily_deterministic(const RpcFamily& family, const FailureSet& f) {
    if (family.variant != RpcVariant::Deterministic)
        throw ArgumentError("family is not deterministic");
    return subfamily_deterministic(family.params, f);
}

}  // namespace fdso
