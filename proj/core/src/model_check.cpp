#include "msok/model_check.hpp"

#include "msok/errors.hpp"

#include <stdexcept>

namespace msok {
namespace {

class Evaluator {
public:
    Evaluator(const Formula& f, const Graph& g, std::span<const VertexSet> sets)
        : f_(f), n_(g.order()), adj_(adjacency_masks(g)), vertex_(f.vertex_slots(), 0), set_(f.set_slots(), 0)
    {
        for (std::size_t i = 0; i < sets.size(); ++i) {
            set_[i] = sets[i].to_mask();
        }
        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool eval(int id)
    {
        const auto& node = f_.node(id);
        switch (node.kind) {
        case NodeKind::Edge:
            return ((adj_[vertex_[node.var]] >> vertex_[node.var2]) & 1U) != 0;
        case NodeKind::Equal:
            return vertex_[node.var] == vertex_[node.var2];
        case NodeKind::Member:
            return ((set_[node.var] >> vertex_[node.var2]) & 1U) != 0;
        case NodeKind::Not:
            return !eval(node.lhs);
        case NodeKind::And:
            return eval(node.lhs) && eval(node.rhs);
        case NodeKind::Or:
            return eval(node.lhs) || eval(node.rhs);
        case NodeKind::Implies:
            return !eval(node.lhs) || eval(node.rhs);
        case NodeKind::Iff:
            return eval(node.lhs) == eval(node.rhs);
        case NodeKind::ExistsVertex:
        case NodeKind::ForallVertex: {
            const bool want = node.kind == NodeKind::ExistsVertex;
            for (std::uint32_t v = 0; v < n_; ++v) {
                vertex_[node.var] = v;
                if (eval(node.lhs) == want) {
                    return want;
                }
            }
            return !want;
        }
        case NodeKind::ExistsSet:
        case NodeKind::ForallSet: {
            const bool want = node.kind == NodeKind::ExistsSet;
            std::uint64_t s = 0;
            do {
                set_[node.var] = s;
                if (eval(node.lhs) == want) {
                    return want;
                }
                s = (s - full_) & full_;
            } while (s != 0);
            return !want;
        }
        }
        throw std::logic_error("model_check: unknown node kind");
    }

private:
    const Formula& f_;
    std::size_t n_;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint32_t> vertex_;
    std::vector<std::uint64_t> set_;
};

} // namespace

bool model_check(const Graph& g, const Formula& f, std::span<const VertexSet> sets)
{
    if (sets.size() != f.free_set_count()) {
        throw std::invalid_argument("model_check: formula has " + std::to_string(f.free_set_count())
                                    + " free set variables but " + std::to_string(sets.size()) + " sets were given");
    }
    for (const auto& s : sets) {
        if (s.universe() != g.order()) {
            throw std::invalid_argument("model_check: set universe does not match the graph order");
        }
    }
    if (g.order() > 64) {
        throw CapExceeded("model_check supports at most 64 vertices, got " + std::to_string(g.order()));
    }
    if (f.root() < 0) {
        throw std::invalid_argument("model_check: empty formula");
    }
    Evaluator ev(f, g, sets);
    return ev.eval(f.root());
}

bool model_check(const Interpretation& interp, const Formula& f)
{
    if (interp.graph == nullptr) {
        throw std::invalid_argument("model_check: interpretation has no graph");
    }
    return model_check(*interp.graph, f, interp.sets);
}

} // namespace msok
