#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace msok {

enum class NodeKind : std::uint8_t {
    Edge,         // E(x, y)
    Equal,        // x = y
    Member,       // X(x)
    Not,
    And,
    ExistsVertex,
    ExistsSet,
    // Derived connectives; removed by desugar().
    Or,
    Implies,
    Iff,
    ForallVertex,
    ForallSet,
};

/// MSO1 formula stored as a node arena. Variables are resolved to slots at
/// parse time: every quantifier owns a fresh slot, and set slots
/// 0..free_sets().size()-1 are the free set variables in declaration order.
/// Individual variables are never free.
class Formula {
public:
    struct Node {
        NodeKind kind;
        /// Children for connectives and quantifier bodies (rhs unused by Not
        /// and quantifiers).
        int lhs = -1;
        int rhs = -1;
        /// Edge/Equal: vertex slots var and var2. Member: set slot var,
        /// vertex slot var2. Quantifiers: the bound slot in var.
        int var = -1;
        int var2 = -1;
    };

    Formula() = default;
    Formula(std::vector<Node> nodes, int root, std::vector<std::string> vertex_names,
            std::vector<std::string> set_names, std::size_t free_set_count);

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    int root() const noexcept { return root_; }

    std::size_t vertex_slots() const noexcept { return vertex_names_.size(); }
    std::size_t set_slots() const noexcept { return set_names_.size(); }
    const std::string& vertex_name(int slot) const { return vertex_names_.at(static_cast<std::size_t>(slot)); }
    const std::string& set_name(int slot) const { return set_names_.at(static_cast<std::size_t>(slot)); }

    /// Free set variables (the l of MSO_{q,l}) in declaration order.
    std::vector<std::string> free_sets() const;
    std::size_t free_set_count() const noexcept { return free_set_count_; }
    bool is_sentence() const noexcept { return free_set_count_ == 0; }

    /// Only Edge, Equal, Member, Not, And, ExistsVertex, ExistsSet occur.
    bool is_core() const;

    /// Fully parenthesised surface syntax; reparses to an equal formula.
    std::string to_string() const;

    friend bool operator==(const Formula&, const Formula&);

private:
    std::vector<Node> nodes_;
    int root_ = -1;
    std::vector<std::string> vertex_names_;
    std::vector<std::string> set_names_;
    std::size_t free_set_count_ = 0;
};

inline bool operator==(const Formula::Node& a, const Formula::Node& b)
{
    return a.kind == b.kind && a.lhs == b.lhs && a.rhs == b.rhs && a.var == b.var && a.var2 == b.var2;
}

/// Maximum nesting depth of vertex and set quantifiers.
int quantifier_rank(const Formula& f);

/// Rewrites or, implies, iff and forall into not/and/exists.
/// Slots and quantifier rank are preserved.
Formula desugar(const Formula& f);

struct FormulaParseOptions {
    /// Free set variables in addition to any `free X` header lines.
    std::vector<std::string> free_sets;
    bool desugar = true;
};

/// Parses a formula document: optional `free X [Y ...]` header lines, `#`
/// comment lines, then one formula in the grammar
///
///     formula := ("exists" | "forall") VAR "." formula
///              | ("exists" | "forall") SETVAR "." formula
///              | disj
///     disj    := conj { "|" conj }
///     conj    := lit { "&" lit }
///     lit     := "!" lit | "(" formula [("->" | "<->") formula] ")" | atom
///     atom    := "E(" VAR "," VAR ")" | VAR "=" VAR | SETVAR "(" VAR ")"
///
/// VAR is a lowercase identifier, SETVAR an uppercase one (E is reserved).
/// A quantifier may also appear where a literal is expected; its scope then
/// extends as far right as possible. Throws ParseError on syntax errors,
/// unbound variables and free individual variables.
Formula parse_formula(std::string_view text, const FormulaParseOptions& options = {});

} // namespace msok
