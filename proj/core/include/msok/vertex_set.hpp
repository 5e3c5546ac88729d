#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace msok {

using Vertex = std::uint32_t;

/// Subset of the vertices {0, ..., n-1} of a graph of order n, stored as a
/// bit vector. The universe size is part of the value: two sets over
/// different universes never compare equal.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);
    /// Low `universe` bits of `mask`; requires universe <= 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
    static VertexSet from_vertices(std::size_t universe, std::span<const Vertex> members);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t count() const noexcept;
    bool empty() const noexcept;

    bool contains(Vertex v) const noexcept
    {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    /// Smallest member, or universe() when empty.
    Vertex first() const noexcept;
    /// Smallest member greater than v, or universe() when none.
    Vertex next(Vertex v) const noexcept;

    std::vector<Vertex> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = __builtin_ctzll(bits);
                fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet complement() const;
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator^=(const VertexSet& other);
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Requires universe() <= 64.
    std::uint64_t to_mask() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::size_t hash() const noexcept;

    /// "{0,3,5}" using 0-based indices.
    std::string to_string() const;

private:
    void check_universe(const VertexSet& other) const;
    void trim() noexcept;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

} // namespace msok
