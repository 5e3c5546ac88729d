#include "msok/game.hpp"

#include "msok/errors.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace msok {

bool partial_isomorphism(const Side& left, const Side& right)
{
    if (left.graph == nullptr || right.graph == nullptr) {
        throw std::invalid_argument("partial_isomorphism: side without a graph");
    }
    if (left.sets.size() != right.sets.size() || left.vertices.size() != right.vertices.size()) {
        throw std::invalid_argument("partial_isomorphism: tuple lengths differ");
    }
    const auto& a = left.vertices;
    const auto& b = right.vertices;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= left.graph->order() || b[i] >= right.graph->order()) {
            throw std::invalid_argument("partial_isomorphism: chosen vertex out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if ((a[i] == a[j]) != (b[i] == b[j])) {
                return false;
            }
            if (left.graph->adjacent(a[i], a[j]) != right.graph->adjacent(b[i], b[j])) {
                return false;
            }
        }
        for (std::size_t s = 0; s < left.sets.size(); ++s) {
            if (left.sets[s].contains(a[i]) != right.sets[s].contains(b[i])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

struct Board {
    std::size_t n = 0;
    std::vector<std::uint64_t> adj;
};

struct Pos {
    std::array<std::vector<std::uint64_t>, 2> sets;
    std::array<std::vector<std::uint8_t>, 2> verts;
};

class GameSearch {
public:
    GameSearch(const Graph& g1, const Graph& g2)
    {
        boards_[0] = {g1.order(), adjacency_masks(g1)};
        boards_[1] = {g2.order(), adjacency_masks(g2)};
    }

    bool wins(Pos& p, int rounds)
    {
        if (!iso(p)) {
            return false;
        }
        if (rounds == 0) {
            return true;
        }
        if (rounds == 1) {
            return patterns(p, 0) == patterns(p, 1);
        }
        const std::string k = key(p, rounds);
        if (auto it = memo_.find(k); it != memo_.end()) {
            return it->second;
        }
        const bool result = spoiler_fails(p, rounds, 0) && spoiler_fails(p, rounds, 1);
        memo_.emplace(k, result);
        return result;
    }

private:
    bool iso(const Pos& p) const
    {
        const auto& a = p.verts[0];
        const auto& b = p.verts[1];
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if ((a[i] == a[j]) != (b[i] == b[j])) {
                    return false;
                }
                if (bit(boards_[0].adj[a[i]], a[j]) != bit(boards_[1].adj[b[i]], b[j])) {
                    return false;
                }
            }
            for (std::size_t s = 0; s < p.sets[0].size(); ++s) {
                if (bit(p.sets[0][s], a[i]) != bit(p.sets[1][s], b[i])) {
                    return false;
                }
            }
        }
        return true;
    }

    static bool bit(std::uint64_t m, std::size_t v) { return ((m >> v) & 1U) != 0; }

    // Atomic relation of a fresh vertex v to the chosen vertices and sets.
    std::vector<bool> pattern(const Pos& p, int side, std::uint8_t v) const
    {
        std::vector<bool> out;
        const auto& vs = p.verts[static_cast<std::size_t>(side)];
        out.reserve(2 * vs.size() + p.sets[0].size());
        for (auto a : vs) {
            out.push_back(a == v);
            out.push_back(bit(boards_[side].adj[v], a));
        }
        for (auto s : p.sets[static_cast<std::size_t>(side)]) {
            out.push_back(bit(s, v));
        }
        return out;
    }

    std::vector<std::vector<bool>> patterns(const Pos& p, int side) const
    {
        std::vector<std::vector<bool>> out;
        for (std::size_t v = 0; v < boards_[side].n; ++v) {
            out.push_back(pattern(p, side, static_cast<std::uint8_t>(v)));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Every spoiler move on `side` has a duplicator answer on the other side.
    bool spoiler_fails(Pos& p, int rounds, int side)
    {
        const auto s = static_cast<std::size_t>(side);
        const auto o = 1 - s;
        const int other = 1 - side;
        const std::size_t n = boards_[side].n;
        const std::size_t m = boards_[other].n;

        for (std::size_t v = 0; v < n; ++v) {
            const auto cv = static_cast<std::uint8_t>(v);
            const auto& chosen = p.verts[s];
            if (std::find(chosen.begin(), chosen.end(), cv) != chosen.end()) {
                continue;
            }
            const auto want = pattern(p, side, cv);
            bool answered = false;
            for (std::size_t u = 0; u < m && !answered; ++u) {
                const auto cu = static_cast<std::uint8_t>(u);
                if (pattern(p, other, cu) != want) {
                    continue;
                }
                p.verts[s].push_back(cv);
                p.verts[o].push_back(cu);
                answered = wins(p, rounds - 1);
                p.verts[s].pop_back();
                p.verts[o].pop_back();
            }
            if (!answered) {
                return false;
            }
        }

        const std::uint64_t full_s = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        const std::uint64_t full_o = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
        std::uint64_t chosen_o = 0;
        for (auto b : p.verts[o]) {
            chosen_o |= std::uint64_t{1} << b;
        }
        std::uint64_t spoil = 0;
        do {
            const auto& existing = p.sets[s];
            if (std::find(existing.begin(), existing.end(), spoil) == existing.end()) {
                // Membership of already chosen vertices is forced.
                std::uint64_t forced = 0;
                for (std::size_t i = 0; i < p.verts[s].size(); ++i) {
                    if (bit(spoil, p.verts[s][i])) {
                        forced |= std::uint64_t{1} << p.verts[o][i];
                    }
                }
                const std::uint64_t free_o = full_o & ~chosen_o;
                bool answered = false;
                std::uint64_t extra = 0;
                do {
                    p.sets[s].push_back(spoil);
                    p.sets[o].push_back(forced | extra);
                    answered = wins(p, rounds - 1);
                    p.sets[s].pop_back();
                    p.sets[o].pop_back();
                    extra = (extra - free_o) & free_o;
                } while (!answered && extra != 0);
                if (!answered) {
                    return false;
                }
            }
            spoil = (spoil - full_s) & full_s;
        } while (spoil != 0);
        return true;
    }

    std::string key(const Pos& p, int rounds) const
    {
        std::string k;
        k.push_back(static_cast<char>(rounds));
        for (std::size_t s = 0; s < 2; ++s) {
            for (auto v : p.verts[s]) {
                k.push_back(static_cast<char>(v));
            }
            k.push_back('|');
            for (auto m : p.sets[s]) {
                k.append(reinterpret_cast<const char*>(&m), sizeof m);
            }
            k.push_back('|');
        }
        return k;
    }

    std::array<Board, 2> boards_;
    std::unordered_map<std::string, bool> memo_;
};

void check_limits(const Graph& g, int rounds, const GameLimits& limits)
{
    const std::size_t cap = std::min<std::size_t>(limits.max_vertices, 64);
    if (g.order() > cap) {
        throw CapExceeded("game search on a graph with " + std::to_string(g.order())
                          + " vertices exceeds the cap of " + std::to_string(cap) + " (raise it with --cap-game)");
    }
    if (rounds > limits.max_rounds) {
        throw CapExceeded("game search with " + std::to_string(rounds) + " rounds exceeds the cap of "
                          + std::to_string(limits.max_rounds) + " rounds");
    }
}

Pos to_pos(const Side& l, const Side& r)
{
    Pos p;
    const Side* sides[2] = {&l, &r};
    for (std::size_t i = 0; i < 2; ++i) {
        for (const auto& s : sides[i]->sets) {
            if (s.universe() != sides[i]->graph->order()) {
                throw std::invalid_argument("game: set universe does not match the graph order");
            }
            p.sets[i].push_back(s.to_mask());
        }
        for (auto v : sides[i]->vertices) {
            p.verts[i].push_back(static_cast<std::uint8_t>(v));
        }
    }
    return p;
}

} // namespace

bool duplicator_wins(const GamePosition& position, const GameLimits& limits)
{
    if (position.rounds_left < 0) {
        throw std::invalid_argument("duplicator_wins: negative round count");
    }
    const bool iso = partial_isomorphism(position.left, position.right);
    check_limits(*position.left.graph, position.rounds_left, limits);
    check_limits(*position.right.graph, position.rounds_left, limits);
    if (!iso) {
        return false;
    }
    Pos p = to_pos(position.left, position.right);
    GameSearch search(*position.left.graph, *position.right.graph);
    return search.wins(p, position.rounds_left);
}

bool types_equal(const Graph& g1, std::span<const VertexSet> sets1, const Graph& g2, std::span<const VertexSet> sets2,
                 int q, const GameLimits& limits)
{
    if (sets1.size() != sets2.size()) {
        throw std::invalid_argument("types_equal: set tuples have different lengths");
    }
    GamePosition pos{Side{&g1, {sets1.begin(), sets1.end()}, {}}, Side{&g2, {sets2.begin(), sets2.end()}, {}}, q};
    return duplicator_wins(pos, limits);
}

} // namespace msok
