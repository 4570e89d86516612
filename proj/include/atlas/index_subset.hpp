#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace atlas {

/// Hard cap on the number of supports in a tuple; subset enumeration is 2^k.
inline constexpr int kMaxTupleSize = 20;

/// A subset of the index set {0,...,k-1} of a tuple, stored as a bit mask.
class IndexSubset {
public:
    constexpr IndexSubset() = default;
    constexpr explicit IndexSubset(std::uint32_t bits) : bits_(bits) {}

    IndexSubset(std::initializer_list<int> indices)
    {
        for (int i : indices) bits_ |= (1u << i);
    }

    static IndexSubset from_indices(const std::vector<int>& indices)
    {
        IndexSubset s;
        for (int i : indices) s.bits_ |= (1u << i);
        return s;
    }

    static constexpr IndexSubset full(int k) { return IndexSubset(k >= 32 ? ~0u : ((1u << k) - 1u)); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    constexpr bool is_subset_of(IndexSubset other) const { return (bits_ & ~other.bits_) == 0; }

    int min_index() const { return std::countr_zero(bits_); }

    std::vector<int> indices() const
    {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    constexpr IndexSubset operator|(IndexSubset o) const { return IndexSubset(bits_ | o.bits_); }
    constexpr IndexSubset operator&(IndexSubset o) const { return IndexSubset(bits_ & o.bits_); }
    constexpr IndexSubset minus(IndexSubset o) const { return IndexSubset(bits_ & ~o.bits_); }
    constexpr IndexSubset with(int i) const { return IndexSubset(bits_ | (1u << i)); }
    constexpr IndexSubset without(int i) const { return IndexSubset(bits_ & ~(1u << i)); }

    constexpr bool operator==(const IndexSubset&) const = default;

    /// Lexicographic order on the sorted index lists.
    bool lex_less(IndexSubset o) const { return indices() < o.indices(); }

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (int i : indices()) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s + "}";
    }

private:
    std::uint32_t bits_ = 0;
};

/// Positions of `inner` inside `outer` after renumbering outer's indices 0,1,...
inline IndexSubset relative_to(IndexSubset outer, IndexSubset inner)
{
    IndexSubset out;
    int pos = 0;
    for (int i : outer.indices()) {
        if (inner.contains(i)) out = out.with(pos);
        ++pos;
    }
    return out;
}

} // namespace atlas
