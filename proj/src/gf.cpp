#include "fdso/gf.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "fdso/errors.hpp"

namespace fdso {

namespace {

// Primitive polynomials over GF(2), one per degree. Bit i = coefficient of
// x^i. Primitivity is asserted while building the tables.
constexpr std::array<std::uint32_t, 17> kPrimitivePoly = {
    0, 0x3,
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11D,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
};

}  // namespace

GfField::GfField(unsigned bits) : bits_(bits), q_(1u << bits) {
    const std::uint32_t poly = kPrimitivePoly[bits];
    const std::uint32_t group_order = q_ - 1;

    log_.assign(q_, 0);
    exp_.assign(2 * group_order, 0);

    std::uint32_t value = 1;
    for (std::uint32_t power = 0; power < group_order; ++power) {
        if (power > 0 && value == 1)
            throw ArgumentError("field polynomial is not primitive");
        exp_[power] = static_cast<std::uint16_t>(value);
        exp_[power + group_order] = static_cast<std::uint16_t>(value);
        log_[value] = static_cast<std::uint16_t>(power);
        value <<= 1;
        if (value & q_) value ^= poly;
    }
    if (value != 1) throw ArgumentError("field polynomial is not primitive");
}

const GfField& GfField::with_bits(unsigned bits) {
    if (bits < 2 || bits > 16)
        throw ArgumentError("field width must be in [2, 16] bits");
    static std::array<std::unique_ptr<GfField>, 17> cache;
    static std::array<std::once_flag, 17> flags;
    std::call_once(flags[bits], [bits] { cache[bits].reset(new GfField(bits)); });
    return *cache[bits];
}

const GfField& GfField::with_order_above(std::uint64_t threshold) {
    for (unsigned bits = 2; bits <= 16; ++bits)
        if ((1ull << bits) > threshold) return with_bits(bits);
    throw BudgetError("required field order exceeds 2^16",
                      "field order above " + std::to_string(threshold) +
                          " requested; shrink L, f, or the graph");
}

std::uint16_t GfField::eval_poly(std::span<const std::uint16_t> coeffs, std::uint16_t x) const {
    std::uint16_t acc = 0;
    for (std::size_t j = coeffs.size(); j-- > 0;)
        acc = static_cast<std::uint16_t>(mul(acc, x) ^ coeffs[j]);
    return acc;
}

}  // namespace fdso
