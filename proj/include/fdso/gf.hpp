#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fdso {

// GF(2^bits) arithmetic via log/antilog tables, bits in [2, 16]. Elements are
// the integers [0, 2^bits) in their bit representation; that integer order is
// the canonical element order used everywhere.
class GfField {
public:
    // Cached per bit width; thread-safe.
    static const GfField& with_bits(unsigned bits);

    // Smallest field with order > threshold (order is a power of two).
    static const GfField& with_order_above(std::uint64_t threshold);

    std::uint32_t order() const { return q_; }
    unsigned bits() const { return bits_; }

    static std::uint16_t add(std::uint16_t a, std::uint16_t b) { return a ^ b; }

    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    // Evaluates sum_j coeffs[j] * x^j by Horner's rule.
    std::uint16_t eval_poly(std::span<const std::uint16_t> coeffs, std::uint16_t x) const;

private:
    explicit GfField(unsigned bits);

    unsigned bits_;
    std::uint32_t q_;
    std::vector<std::uint16_t> log_;   // index by element, element 0 unused
    std::vector<std::uint16_t> exp_;   // doubled so log sums need no reduction
};

}  // namespace fdso
