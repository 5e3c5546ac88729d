#include "msok/type_table.hpp"

#include "msok/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace msok {

TypeId TypeTable::intern(std::string key)
{
    const auto next = static_cast<TypeId>(ids_.size());
    return ids_.try_emplace(std::move(key), next).first->second;
}

class TypeBuilder {
public:
    TypeBuilder(TypeTable& table, const Graph& g) : table_(table), n_(g.order()), adj_(adjacency_masks(g))
    {
        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    TypeId type(std::vector<std::uint64_t>& sets, std::vector<std::uint8_t>& verts, int r)
    {
        std::string key = std::to_string(r) + ":" + std::to_string(sets.size()) + ":" + std::to_string(verts.size())
                          + ":" + atomic(sets, verts);
        if (r == 0) {
            return table_.intern(std::move(key));
        }
        if (r == 1) {
            std::vector<std::string> ext;
            for (std::size_t v = 0; v < n_; ++v) {
                ext.push_back(extension(sets, verts, static_cast<std::uint8_t>(v)));
            }
            std::sort(ext.begin(), ext.end());
            ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
            for (auto& e : ext) {
                key += "/" + e;
            }
            return table_.intern(std::move(key));
        }
        // Picking an already chosen vertex is visible in the atomic type of
        // the extension, so those moves can be left out.
        std::vector<TypeId> vertex_ids;
        for (std::size_t v = 0; v < n_; ++v) {
            const auto cv = static_cast<std::uint8_t>(v);
            if (std::find(verts.begin(), verts.end(), cv) != verts.end()) {
                continue;
            }
            verts.push_back(cv);
            vertex_ids.push_back(type(sets, verts, r - 1));
            verts.pop_back();
        }
        std::vector<TypeId> set_ids;
        std::uint64_t s = 0;
        do {
            sets.push_back(s);
            set_ids.push_back(type(sets, verts, r - 1));
            sets.pop_back();
            s = (s - full_) & full_;
        } while (s != 0);
        for (auto* ids : {&vertex_ids, &set_ids}) {
            std::sort(ids->begin(), ids->end());
            ids->erase(std::unique(ids->begin(), ids->end()), ids->end());
            key += "/";
            for (auto id : *ids) {
                key += std::to_string(id) + ",";
            }
        }
        return table_.intern(std::move(key));
    }

private:
    static char flag(bool b) { return b ? '1' : '0'; }

    std::string atomic(const std::vector<std::uint64_t>& sets, const std::vector<std::uint8_t>& verts) const
    {
        std::string out;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                out.push_back(flag(verts[i] == verts[j]));
                out.push_back(flag(((adj_[verts[i]] >> verts[j]) & 1U) != 0));
            }
            for (auto s : sets) {
                out.push_back(flag(((s >> verts[i]) & 1U) != 0));
            }
        }
        return out;
    }

    std::string extension(const std::vector<std::uint64_t>& sets, const std::vector<std::uint8_t>& verts,
                          std::uint8_t v) const
    {
        std::string out;
        for (auto a : verts) {
            out.push_back(flag(a == v));
            out.push_back(flag(((adj_[v] >> a) & 1U) != 0));
        }
        for (auto s : sets) {
            out.push_back(flag(((s >> v) & 1U) != 0));
        }
        return out;
    }

    TypeTable& table_;
    std::size_t n_;
    std::uint64_t full_;
    std::vector<std::uint64_t> adj_;
};

TypeId TypeTable::type_of(const Graph& g, std::span<const VertexSet> sets, int q)
{
    if (q < 0) {
        throw std::invalid_argument("type_of: negative quantifier rank");
    }
    const std::size_t cap = std::min<std::size_t>(limits_.max_vertices, 64);
    if (g.order() > cap) {
        throw CapExceeded("type computation on a graph with " + std::to_string(g.order())
                          + " vertices exceeds the cap of " + std::to_string(cap) + " (raise it with --cap-game)");
    }
    if (q > limits_.max_rounds) {
        throw CapExceeded("type computation of rank " + std::to_string(q) + " exceeds the cap of "
                          + std::to_string(limits_.max_rounds) + " rounds");
    }
    std::vector<std::uint64_t> masks;
    for (const auto& s : sets) {
        if (s.universe() != g.order()) {
            throw std::invalid_argument("type_of: set universe does not match the graph order");
        }
        masks.push_back(s.to_mask());
    }
    std::vector<std::uint8_t> verts;
    TypeBuilder builder(*this, g);
    return builder.type(masks, verts, q);
}

} // namespace msok
