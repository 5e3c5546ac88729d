#include "msok/graph_io.hpp"

#include "msok/errors.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace msok {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::optional<std::size_t> parse_count(std::string_view tok)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        return std::nullopt;
    }
    return value;
}

} // namespace

Graph parse_graph(std::string_view text, std::vector<std::string>* warnings)
{
    std::optional<std::size_t> declared_n;
    std::optional<std::size_t> declared_m;
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> index;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    auto warn = [&](std::size_t line_no, const std::string& msg) {
        if (warnings != nullptr) {
            warnings->push_back("line " + std::to_string(line_no) + ": " + msg);
        }
    };

    auto resolve = [&](std::string_view tok, std::size_t line_no) -> Vertex {
        if (declared_n) {
            auto id = parse_count(tok);
            if (!id || *id < 1 || *id > *declared_n) {
                throw ParseError("reference to undeclared vertex '" + std::string(tok) + "' (header declares "
                                     + std::to_string(*declared_n) + " vertices)",
                                 line_no);
            }
            return static_cast<Vertex>(*id - 1);
        }
        auto [it, inserted] = index.try_emplace(std::string(tok), static_cast<Vertex>(labels.size()));
        if (inserted) {
            labels.emplace_back(tok);
        }
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto toks = split_tokens(line);
        if (toks.empty() || toks[0] == "c") {
            continue;
        }
        if (toks[0] == "p") {
            if (declared_n) {
                throw ParseError("duplicate header line", line_no);
            }
            if (!edges.empty()) {
                throw ParseError("header must precede edge lines", line_no);
            }
            // "p <n> <m>" or the DIMACS-like "p <format> <n> <m>".
            std::size_t first = toks.size() == 4 ? 2 : 1;
            if (toks.size() != 3 && toks.size() != 4) {
                throw ParseError("header must be 'p <n> <m>'", line_no);
            }
            declared_n = parse_count(toks[first]);
            declared_m = parse_count(toks[first + 1]);
            if (!declared_n || !declared_m) {
                throw ParseError("header counts must be nonnegative integers", line_no);
            }
            continue;
        }
        std::string_view a;
        std::string_view b;
        if (toks[0] == "e") {
            if (toks.size() != 3) {
                throw ParseError("edge line must be 'e <u> <v>'", line_no);
            }
            a = toks[1];
            b = toks[2];
        } else if (toks.size() == 2) {
            a = toks[0];
            b = toks[1];
        } else {
            throw ParseError("unrecognised line '" + std::string(line) + "'", line_no);
        }
        const Vertex u = resolve(a, line_no);
        const Vertex v = resolve(b, line_no);
        if (u == v) {
            throw ParseError("self-loop on vertex '" + std::string(a) + "'", line_no);
        }
        const auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            warn(line_no, "duplicate edge " + std::string(a) + " " + std::string(b) + " ignored");
            continue;
        }
        edges.emplace_back(u, v);
    }

    const std::size_t n = declared_n ? *declared_n : labels.size();
    Graph g(n, edges);
    if (declared_n) {
        if (*declared_m != edges.size()) {
            warn(0, "header declares " + std::to_string(*declared_m) + " edges, found " + std::to_string(edges.size()));
        }
        std::vector<std::string> numbered;
        numbered.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) {
            numbered.push_back(std::to_string(i));
        }
        g.set_labels(std::move(numbered));
    } else {
        g.set_labels(std::move(labels));
    }
    return g;
}

std::string emit_graph(const Graph& g)
{
    std::ostringstream os;
    os << "p " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) {
        os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    }
    return os.str();
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace msok
