#include "msok/vertex_set.hpp"

#include "msok/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace msok {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(column == 0
              ? "line " + std::to_string(line) + ": " + message
              : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0)
{
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe)
{
    for (Vertex v : members) {
        insert(v);
    }
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    for (auto& w : s.words_) {
        w = ~std::uint64_t{0};
    }
    s.trim();
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask)
{
    if (universe > 64) {
        throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
    }
    VertexSet s(universe);
    if (universe > 0) {
        s.words_[0] = mask;
        s.trim();
    }
    return s;
}

VertexSet VertexSet::from_vertices(std::size_t universe, std::span<const Vertex> members)
{
    VertexSet s(universe);
    for (Vertex v : members) {
        s.insert(v);
    }
    return s;
}

std::size_t VertexSet::count() const noexcept
{
    std::size_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::size_t>(__builtin_popcountll(w));
    }
    return c;
}

bool VertexSet::empty() const noexcept
{
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

void VertexSet::insert(Vertex v)
{
    if (v >= universe_) {
        throw std::out_of_range("VertexSet::insert: vertex " + std::to_string(v) + " outside universe of size "
                                + std::to_string(universe_));
    }
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v)
{
    if (v < universe_) {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
}

Vertex VertexSet::first() const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w])));
        }
    }
    return static_cast<Vertex>(universe_);
}

Vertex VertexSet::next(Vertex v) const noexcept
{
    std::size_t start = static_cast<std::size_t>(v) + 1;
    if (start >= universe_) {
        return static_cast<Vertex>(universe_);
    }
    std::size_t w = start >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (bits != 0) {
            return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
        }
        if (++w == words_.size()) {
            return static_cast<Vertex>(universe_);
        }
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

void VertexSet::check_universe(const VertexSet& other) const
{
    if (universe_ != other.universe_) {
        throw std::invalid_argument("VertexSet: universe mismatch (" + std::to_string(universe_) + " vs "
                                    + std::to_string(other.universe_) + ")");
    }
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

VertexSet VertexSet::complement() const
{
    VertexSet out(*this);
    for (auto& w : out.words_) {
        w = ~w;
    }
    out.trim();
    return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other)
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

std::uint64_t VertexSet::to_mask() const
{
    if (universe_ > 64) {
        throw std::invalid_argument("VertexSet::to_mask: universe exceeds 64");
    }
    return words_.empty() ? 0 : words_[0];
}

std::size_t VertexSet::hash() const noexcept
{
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string VertexSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first_member = true;
    for_each([&](Vertex v) {
        if (!first_member) {
            os << ',';
        }
        os << v;
        first_member = false;
    });
    os << '}';
    return os.str();
}

void VertexSet::trim() noexcept
{
    const std::size_t rem = universe_ & 63;
    if (rem != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << rem) - 1;
    }
}

} // namespace msok
