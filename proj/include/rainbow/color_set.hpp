#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <unordered_set>

namespace rainbow {

/// Color-rank set for palettes of at most `capacity` colors.
class FixedColorSet {
public:
    static constexpr std::size_t capacity = 1024;

    [[nodiscard]] bool contains(std::uint32_t rank) const { return bits_.test(rank); }
    void insert(std::uint32_t rank) { bits_.set(rank); }
    void erase(std::uint32_t rank) { bits_.reset(rank); }
    [[nodiscard]] std::size_t size() const { return bits_.count(); }

private:
    std::bitset<capacity> bits_;
};

/// Fallback for large palettes; a search path only ever holds a handful of colors.
class HashColorSet {
public:
    [[nodiscard]] bool contains(std::uint32_t rank) const { return set_.contains(rank); }
    void insert(std::uint32_t rank) { set_.insert(rank); }
    void erase(std::uint32_t rank) { set_.erase(rank); }
    [[nodiscard]] std::size_t size() const { return set_.size(); }

private:
    std::unordered_set<std::uint32_t> set_;
};

} // namespace rainbow
