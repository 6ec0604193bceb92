#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sepcodes {

using Vertex = std::uint32_t;

/// Subset of the vertex range {0, ..., universe-1}, stored as a packed bitset.
///
/// Ordering is lexicographic on the sorted member lists, so {0,2} < {1,2}
/// and {0} < {0,1}. Binary set operations require equal universes.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet from_members(std::size_t universe, std::span<const Vertex> members);
    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    bool intersects(const VertexSet& other) const noexcept;
    bool is_subset_of(const VertexSet& other) const noexcept;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator^=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    std::vector<Vertex> members() const;
    std::optional<Vertex> first() const noexcept;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<Vertex>(std::countr_zero(bits));
                f(static_cast<Vertex>(w * 64 + bit));
                bits &= bits - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// "{0,3,5}"
    std::string to_string() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace sepcodes
