#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace fdso {

namespace detail {
inline std::uint64_t fib_hash(std::uint32_t key) {
    return static_cast<std::uint64_t>(key) * 0x9e3779b97f4a7c15ULL;
}
inline std::uint32_t table_capacity(std::size_t n) {
    std::uint32_t cap = 4;
    while (cap < 2 * n) cap <<= 1;
    return cap;
}
}  // namespace detail

// Static open-addressing map from uint32 keys to doubles. Built once, then
// read-only; O(1) expected lookup at load factor <= 1/2. Key 0xffffffff is
// reserved as the empty slot marker.
class FlatMap {
public:
    static constexpr std::uint32_t kEmpty = 0xffffffffu;

    FlatMap() = default;

    explicit FlatMap(const std::vector<std::pair<std::uint32_t, double>>& entries) {
        const std::uint32_t cap = detail::table_capacity(entries.size());
        keys_.assign(cap, kEmpty);
        vals_.resize(cap);
        size_ = entries.size();
        for (const auto& [key, value] : entries) {
            std::uint32_t slot = static_cast<std::uint32_t>(detail::fib_hash(key) >> 32) & (cap - 1);
            while (keys_[slot] != kEmpty) slot = (slot + 1) & (cap - 1);
            keys_[slot] = key;
            vals_[slot] = value;
        }
    }

    const double* find(std::uint32_t key) const {
        if (keys_.empty()) return nullptr;
        const std::uint32_t mask = static_cast<std::uint32_t>(keys_.size()) - 1;
        std::uint32_t slot = static_cast<std::uint32_t>(detail::fib_hash(key) >> 32) & mask;
        while (keys_[slot] != kEmpty) {
            if (keys_[slot] == key) return &vals_[slot];
            slot = (slot + 1) & mask;
        }
        return nullptr;
    }

    bool contains(std::uint32_t key) const { return find(key) != nullptr; }
    std::size_t size() const { return size_; }
    std::size_t slot_count() const { return keys_.size(); }

    // Entries in ascending key order; used for canonical serialization.
    std::vector<std::pair<std::uint32_t, double>> sorted_entries() const {
        std::vector<std::pair<std::uint32_t, double>> out;
        out.reserve(size_);
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] != kEmpty) out.emplace_back(keys_[i], vals_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<std::uint32_t> keys_;
    std::vector<double> vals_;
    std::size_t size_ = 0;
};

// Static membership set over uint32 keys, same layout rules as FlatMap.
class FlatSet {
public:
    static constexpr std::uint32_t kEmpty = 0xffffffffu;

    FlatSet() = default;

    explicit FlatSet(const std::vector<std::uint32_t>& keys) {
        const std::uint32_t cap = detail::table_capacity(keys.size());
        keys_.assign(cap, kEmpty);
        size_ = keys.size();
        for (std::uint32_t key : keys) {
            std::uint32_t slot = static_cast<std::uint32_t>(detail::fib_hash(key) >> 32) & (cap - 1);
            while (keys_[slot] != kEmpty) slot = (slot + 1) & (cap - 1);
            keys_[slot] = key;
        }
    }

    bool contains(std::uint32_t key) const {
        if (keys_.empty()) return false;
        const std::uint32_t mask = static_cast<std::uint32_t>(keys_.size()) - 1;
        std::uint32_t slot = static_cast<std::uint32_t>(detail::fib_hash(key) >> 32) & mask;
        while (keys_[slot] != kEmpty) {
            if (keys_[slot] == key) return true;
            slot = (slot + 1) & mask;
        }
        return false;
    }

    std::size_t size() const { return size_; }
    std::size_t slot_count() const { return keys_.size(); }

private:
    std::vector<std::uint32_t> keys_;
    std::size_t size_ = 0;
};

}  // namespace fdso
