#include "msok/errors.hpp"
#include "msok/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace msok {
namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Eq, Bang, Amp, Bar, Arrow, DArrow, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token& t)
{
    return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                advance(1);
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::size_t l = line;
        const std::size_t cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size()
                   && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) {
                ++j;
            }
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
        Tok kind;
        std::size_t len = 1;
        if (starts("<->")) {
            kind = Tok::DArrow;
            len = 3;
        } else if (starts("->")) {
            kind = Tok::Arrow;
            len = 2;
        } else {
            switch (c) {
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ',': kind = Tok::Comma; break;
            case '.': kind = Tok::Dot; break;
            case '=': kind = Tok::Eq; break;
            case '!': kind = Tok::Bang; break;
            case '&': kind = Tok::Amp; break;
            case '|': kind = Tok::Bar; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
            }
        }
        out.push_back({kind, std::string(text.substr(i, len)), l, cl});
        advance(len);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

bool is_lower(const std::string& s) { return std::islower(static_cast<unsigned char>(s[0])) != 0; }
bool is_upper(const std::string& s) { return std::isupper(static_cast<unsigned char>(s[0])) != 0; }

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<std::string> free_sets) : toks_(std::move(tokens))
    {
        for (auto& name : free_sets) {
            declare_free(name, 0, 0);
        }
    }

    Formula parse()
    {
        read_headers();
        if (peek().kind == Tok::End) {
            throw ParseError("empty formula", peek().line, peek().column);
        }
        const int root = formula();
        if (peek().kind != Tok::End) {
            fail("unexpected " + describe(peek()) + " after formula");
        }
        return Formula(std::move(nodes_), root, std::move(vertex_names_), std::move(set_names_), free_count_);
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& msg, const Token* at = nullptr) const
    {
        const Token& t = at != nullptr ? *at : peek();
        throw ParseError(msg, t.line, t.column);
    }

    Token expect(Tok kind, const char* what)
    {
        if (peek().kind != kind) {
            fail(std::string("expected ") + what + ", found " + describe(peek()));
        }
        return take();
    }

    int add(Formula::Node n)
    {
        nodes_.push_back(n);
        return static_cast<int>(nodes_.size() - 1);
    }

    void declare_free(const std::string& name, std::size_t line, std::size_t column)
    {
        if (name.empty() || !is_upper(name)) {
            throw ParseError("free variable '" + name + "' must be an uppercase set variable", line, column);
        }
        if (name == "E") {
            throw ParseError("'E' is reserved for the edge relation", line, column);
        }
        if (std::find(set_names_.begin(), set_names_.end(), name) != set_names_.end()) {
            return;
        }
        set_names_.push_back(name);
        set_scope_.emplace_back(name, static_cast<int>(set_names_.size() - 1));
        ++free_count_;
    }

    void read_headers()
    {
        while (peek().kind == Tok::Ident && peek().text == "free" && peek(1).kind == Tok::Ident
               && is_upper(peek(1).text)) {
            const std::size_t line = take().line;
            while (peek().kind == Tok::Ident && peek().line == line) {
                const Token t = take();
                declare_free(t.text, t.line, t.column);
            }
            if (peek().kind == Tok::Comma) {
                fail("free set variables are separated by spaces");
            }
        }
    }

    static std::optional<int> lookup(const std::vector<std::pair<std::string, int>>& scope, const std::string& name)
    {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
            if (it->first == name) {
                return it->second;
            }
        }
        return std::nullopt;
    }

    int vertex_var()
    {
        const Token t = expect(Tok::Ident, "an individual variable");
        if (!is_lower(t.text)) {
            fail("'" + t.text + "' is not an individual variable (those are lowercase)", &t);
        }
        auto slot = lookup(vertex_scope_, t.text);
        if (!slot) {
            fail("unbound individual variable '" + t.text + "' (individual variables cannot be free)", &t);
        }
        return *slot;
    }

    bool at_quantifier() const
    {
        return peek().kind == Tok::Ident && (peek().text == "exists" || peek().text == "forall");
    }

    int formula()
    {
        if (at_quantifier()) {
            return quantified();
        }
        return disjunction();
    }

    int quantified()
    {
        const bool exists = take().text == "exists";
        const Token var = expect(Tok::Ident, "a variable after the quantifier");
        expect(Tok::Dot, "'.' after the quantified variable");
        if (var.text == "exists" || var.text == "forall" || var.text == "free") {
            fail("'" + var.text + "' is a keyword", &var);
        }
        if (is_lower(var.text)) {
            vertex_names_.push_back(var.text);
            const int slot = static_cast<int>(vertex_names_.size() - 1);
            vertex_scope_.emplace_back(var.text, slot);
            const int body = formula();
            vertex_scope_.pop_back();
            return add({exists ? NodeKind::ExistsVertex : NodeKind::ForallVertex, body, -1, slot, -1});
        }
        if (!is_upper(var.text)) {
            fail("variable names start with a letter", &var);
        }
        if (var.text == "E") {
            fail("'E' is reserved for the edge relation", &var);
        }
        set_names_.push_back(var.text);
        const int slot = static_cast<int>(set_names_.size() - 1);
        set_scope_.emplace_back(var.text, slot);
        const int body = formula();
        set_scope_.pop_back();
        return add({exists ? NodeKind::ExistsSet : NodeKind::ForallSet, body, -1, slot, -1});
    }

    int disjunction()
    {
        int left = conjunction();
        while (peek().kind == Tok::Bar) {
            take();
            left = add({NodeKind::Or, left, conjunction(), -1, -1});
        }
        return left;
    }

    int conjunction()
    {
        int left = literal();
        while (peek().kind == Tok::Amp) {
            take();
            left = add({NodeKind::And, left, literal(), -1, -1});
        }
        return left;
    }

    int literal()
    {
        if (peek().kind == Tok::Bang) {
            take();
            return add({NodeKind::Not, literal(), -1, -1, -1});
        }
        if (at_quantifier()) {
            return quantified();
        }
        if (peek().kind == Tok::LParen) {
            take();
            const int inner = formula();
            if (peek().kind == Tok::Arrow || peek().kind == Tok::DArrow) {
                const bool iff = take().kind == Tok::DArrow;
                const int rhs = formula();
                expect(Tok::RParen, "')'");
                return add({iff ? NodeKind::Iff : NodeKind::Implies, inner, rhs, -1, -1});
            }
            expect(Tok::RParen, "')'");
            return inner;
        }
        return atom();
    }

    int atom()
    {
        if (peek().kind != Tok::Ident) {
            fail("expected a formula, found " + describe(peek()));
        }
        const Token head = take();
        if (head.text == "E" && peek().kind == Tok::LParen) {
            take();
            const int x = vertex_var();
            expect(Tok::Comma, "',' in E(x,y)");
            const int y = vertex_var();
            expect(Tok::RParen, "')'");
            return add({NodeKind::Edge, -1, -1, x, y});
        }
        if (is_upper(head.text)) {
            auto slot = lookup(set_scope_, head.text);
            if (!slot) {
                fail("unbound set variable '" + head.text + "' (declare it with 'free " + head.text + "')", &head);
            }
            expect(Tok::LParen, "'(' after set variable");
            const int x = vertex_var();
            expect(Tok::RParen, "')'");
            return add({NodeKind::Member, -1, -1, *slot, x});
        }
        --pos_;
        const int x = vertex_var();
        expect(Tok::Eq, "'=' after individual variable");
        const int y = vertex_var();
        return add({NodeKind::Equal, -1, -1, x, y});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<Formula::Node> nodes_;
    std::vector<std::string> vertex_names_;
    std::vector<std::string> set_names_;
    std::size_t free_count_ = 0;
    std::vector<std::pair<std::string, int>> vertex_scope_;
    std::vector<std::pair<std::string, int>> set_scope_;
};

} // namespace

Formula parse_formula(std::string_view text, const FormulaParseOptions& options)
{
    Parser parser(tokenize(text), options.free_sets);
    Formula f = parser.parse();
    return options.desugar ? desugar(f) : f;
}

} // namespace msok
