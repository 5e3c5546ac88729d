#include "msok/formula.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace msok {

Formula::Formula(std::vector<Node> nodes, int root, std::vector<std::string> vertex_names,
                 std::vector<std::string> set_names, std::size_t free_set_count)
    : nodes_(std::move(nodes)),
      root_(root),
      vertex_names_(std::move(vertex_names)),
      set_names_(std::move(set_names)),
      free_set_count_(free_set_count)
{
    if (root_ < 0 || static_cast<std::size_t>(root_) >= nodes_.size()) {
        throw std::invalid_argument("Formula: root out of range");
    }
    if (free_set_count_ > set_names_.size()) {
        throw std::invalid_argument("Formula: more free sets than set slots");
    }
}

std::vector<std::string> Formula::free_sets() const
{
    return {set_names_.begin(), set_names_.begin() + static_cast<std::ptrdiff_t>(free_set_count_)};
}

bool Formula::is_core() const
{
    return std::all_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.kind <= NodeKind::ExistsSet; });
}

bool operator==(const Formula& a, const Formula& b)
{
    if (a.root_ < 0 || b.root_ < 0) {
        return a.root_ == b.root_;
    }
    // Structural comparison from the roots, so unreachable arena nodes do
    // not matter.
    std::function<bool(int, int)> same = [&](int x, int y) -> bool {
        if (x < 0 || y < 0) {
            return x == y;
        }
        const auto& p = a.node(x);
        const auto& q = b.node(y);
        return p.kind == q.kind && p.var == q.var && p.var2 == q.var2 && same(p.lhs, q.lhs) && same(p.rhs, q.rhs);
    };
    return a.vertex_names_ == b.vertex_names_ && a.set_names_ == b.set_names_
           && a.free_set_count_ == b.free_set_count_ && same(a.root_, b.root_);
}

std::string Formula::to_string() const
{
    std::function<std::string(int)> show = [&](int id) -> std::string {
        const Node& n = node(id);
        switch (n.kind) {
        case NodeKind::Edge:
            return "E(" + vertex_name(n.var) + "," + vertex_name(n.var2) + ")";
        case NodeKind::Equal:
            return vertex_name(n.var) + " = " + vertex_name(n.var2);
        case NodeKind::Member:
            return set_name(n.var) + "(" + vertex_name(n.var2) + ")";
        case NodeKind::Not:
            return "!(" + show(n.lhs) + ")";
        case NodeKind::And:
            return "(" + show(n.lhs) + " & " + show(n.rhs) + ")";
        case NodeKind::Or:
            return "(" + show(n.lhs) + " | " + show(n.rhs) + ")";
        case NodeKind::Implies:
            return "(" + show(n.lhs) + " -> " + show(n.rhs) + ")";
        case NodeKind::Iff:
            return "(" + show(n.lhs) + " <-> " + show(n.rhs) + ")";
        case NodeKind::ExistsVertex:
            return "(exists " + vertex_name(n.var) + ". " + show(n.lhs) + ")";
        case NodeKind::ForallVertex:
            return "(forall " + vertex_name(n.var) + ". " + show(n.lhs) + ")";
        case NodeKind::ExistsSet:
            return "(exists " + set_name(n.var) + ". " + show(n.lhs) + ")";
        case NodeKind::ForallSet:
            return "(forall " + set_name(n.var) + ". " + show(n.lhs) + ")";
        }
        return {};
    };
    std::string head;
    for (std::size_t i = 0; i < free_set_count_; ++i) {
        head += (i == 0 ? "free " : " ") + set_names_[i];
    }
    if (!head.empty()) {
        head += "\n";
    }
    return head + show(root_);
}

int quantifier_rank(const Formula& f)
{
    std::function<int(int)> rank = [&](int id) -> int {
        if (id < 0) {
            return 0;
        }
        const auto& n = f.node(id);
        switch (n.kind) {
        case NodeKind::Edge:
        case NodeKind::Equal:
        case NodeKind::Member:
            return 0;
        case NodeKind::ExistsVertex:
        case NodeKind::ExistsSet:
        case NodeKind::ForallVertex:
        case NodeKind::ForallSet:
            return 1 + rank(n.lhs);
        default:
            return std::max(rank(n.lhs), rank(n.rhs));
        }
    };
    return rank(f.root());
}

Formula desugar(const Formula& f)
{
    std::vector<Formula::Node> out;
    auto add = [&](Formula::Node n) {
        out.push_back(n);
        return static_cast<int>(out.size() - 1);
    };
    auto neg = [&](int x) { return add({NodeKind::Not, x, -1, -1, -1}); };
    auto conj = [&](int x, int y) { return add({NodeKind::And, x, y, -1, -1}); };

    std::function<int(int)> rewrite = [&](int id) -> int {
        const auto n = f.node(id);
        switch (n.kind) {
        case NodeKind::Edge:
        case NodeKind::Equal:
        case NodeKind::Member:
            return add(n);
        case NodeKind::Not:
            return neg(rewrite(n.lhs));
        case NodeKind::And:
            return conj(rewrite(n.lhs), rewrite(n.rhs));
        case NodeKind::Or:
            return neg(conj(neg(rewrite(n.lhs)), neg(rewrite(n.rhs))));
        case NodeKind::Implies:
            return neg(conj(rewrite(n.lhs), neg(rewrite(n.rhs))));
        case NodeKind::Iff: {
            const int forward = neg(conj(rewrite(n.lhs), neg(rewrite(n.rhs))));
            const int backward = neg(conj(rewrite(n.rhs), neg(rewrite(n.lhs))));
            return conj(forward, backward);
        }
        case NodeKind::ExistsVertex:
        case NodeKind::ExistsSet:
            return add({n.kind, rewrite(n.lhs), -1, n.var, -1});
        case NodeKind::ForallVertex:
            return neg(add({NodeKind::ExistsVertex, neg(rewrite(n.lhs)), -1, n.var, -1}));
        case NodeKind::ForallSet:
            return neg(add({NodeKind::ExistsSet, neg(rewrite(n.lhs)), -1, n.var, -1}));
        }
        throw std::logic_error("desugar: unknown node kind");
    };
    const int root = rewrite(f.root());
    std::vector<std::string> vnames;
    std::vector<std::string> snames;
    for (std::size_t i = 0; i < f.vertex_slots(); ++i) {
        vnames.push_back(f.vertex_name(static_cast<int>(i)));
    }
    for (std::size_t i = 0; i < f.set_slots(); ++i) {
        snames.push_back(f.set_name(static_cast<int>(i)));
    }
    return Formula(std::move(out), root, std::move(vnames), std::move(snames), f.free_set_count());
}

} // namespace msok
