#include "msok/kernel_io.hpp"

#include "msok/errors.hpp"
#include "msok/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>

namespace msok {
namespace {

std::string module_lines(const Graph& g, const std::vector<VertexSet>& modules)
{
    std::string out;
    for (std::size_t i = 0; i < modules.size(); ++i) {
        out += "module " + std::to_string(i + 1) + ":";
        modules[i].for_each([&](Vertex v) { out += " " + g.label(v); });
        out += "\n";
    }
    return out;
}

std::string labels_of(const Graph& g, const VertexSet& s)
{
    std::string out;
    s.for_each([&](Vertex v) { out += (out.empty() ? "" : " ") + g.label(v); });
    return out;
}

std::vector<std::string> words(std::string_view text)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    for (std::string w; in >> w;) {
        out.push_back(w);
    }
    return out;
}

bool starts_with_word(std::string_view line, std::string_view word)
{
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return false;
    }
    line.remove_prefix(first);
    return line.substr(0, word.size()) == word
           && (line.size() == word.size() || line[word.size()] == ' ' || line[word.size()] == '\t'
               || line[word.size()] == ':' || line[word.size()] == '(');
}

template <typename T>
bool to_number(std::string_view s, T& out)
{
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

} // namespace

std::string emit_kernel(const McKernel& k) { return emit_graph(k.graph) + module_lines(k.graph, k.modules); }

std::string emit_annotated(const AnnotatedInstance& a)
{
    std::string out = emit_graph(a.graph) + module_lines(a.graph, a.modules);
    for (const auto& t : a.annotation.triples) {
        out += "annotation (" + labels_of(a.graph, t.x) + " | " + labels_of(a.graph, t.y) + " | "
               + std::to_string(t.w) + ")\n";
    }
    out += "threshold " + std::to_string(a.r) + "\n";
    out += "direction " + to_string(a.direction) + "\n";
    return out;
}

AnnotatedInstance parse_annotated(std::string_view text)
{
    struct Pending {
        std::size_t line;
        std::string body;
    };
    std::string graph_text;
    std::vector<Pending> module_rows;
    std::vector<Pending> triple_rows;
    AnnotatedInstance out;

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
        if (starts_with_word(line, "module")) {
            module_rows.push_back({line_no, std::string(line)});
        } else if (starts_with_word(line, "annotation")) {
            triple_rows.push_back({line_no, std::string(line)});
        } else if (starts_with_word(line, "threshold")) {
            const auto w = words(line);
            if (w.size() != 2 || !to_number(w[1], out.r)) {
                throw ParseError("threshold line must be 'threshold <integer>'", line_no);
            }
        } else if (starts_with_word(line, "direction")) {
            const auto w = words(line);
            auto d = w.size() == 2 ? parse_direction(w[1]) : std::nullopt;
            if (!d) {
                throw ParseError("direction line must be 'direction <=' or 'direction >='", line_no);
            }
            out.direction = *d;
        } else {
            graph_text += line;
        }
        graph_text += "\n";
    }

    // Line numbers survive because every extracted line leaves a blank one.
    out.graph = parse_graph(graph_text);
    const std::size_t n = out.graph.order();

    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> index;
    for (const auto& row : module_rows) {
        const auto colon = row.body.find(':');
        if (colon == std::string::npos) {
            throw ParseError("module line must be 'module <i>: <labels>'", row.line);
        }
        const auto head = words(std::string_view(row.body).substr(0, colon));
        std::size_t id = 0;
        if (head.size() != 2 || !to_number(head[1], id) || id != out.modules.size() + 1) {
            throw ParseError("modules must be numbered 1, 2, ... in order", row.line);
        }
        VertexSet m(n);
        for (const auto& label : words(std::string_view(row.body).substr(colon + 1))) {
            if (labels.size() >= n) {
                throw ParseError("module lines list more vertices than the graph has", row.line);
            }
            if (!index.try_emplace(label, static_cast<Vertex>(labels.size())).second) {
                throw ParseError("label '" + label + "' appears twice", row.line);
            }
            m.insert(static_cast<Vertex>(labels.size()));
            labels.push_back(label);
        }
        if (m.empty()) {
            throw ParseError("module " + std::to_string(id) + " is empty", row.line);
        }
        out.modules.push_back(std::move(m));
    }
    if (!module_rows.empty()) {
        if (labels.size() != n) {
            throw ParseError("module lines list " + std::to_string(labels.size()) + " vertices, the graph has "
                                 + std::to_string(n),
                             module_rows.back().line);
        }
        out.graph.set_labels(labels);
    } else {
        for (std::size_t v = 0; v < n; ++v) {
            index.emplace(out.graph.label(static_cast<Vertex>(v)), static_cast<Vertex>(v));
        }
    }

    for (const auto& row : triple_rows) {
        const auto open = row.body.find('(');
        const auto close = row.body.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open) {
            throw ParseError("annotation line must be 'annotation (<X> | <Y> | <w>)'", row.line);
        }
        const std::string inner = row.body.substr(open + 1, close - open - 1);
        const auto bar1 = inner.find('|');
        const auto bar2 = bar1 == std::string::npos ? std::string::npos : inner.find('|', bar1 + 1);
        if (bar2 == std::string::npos || inner.find('|', bar2 + 1) != std::string::npos) {
            throw ParseError("annotation needs three '|'-separated parts", row.line);
        }
        AnnotationTriple t{VertexSet(n), VertexSet(n), 0};
        auto fill = [&](std::string_view part, VertexSet& s) {
            for (const auto& label : words(part)) {
                auto it = index.find(label);
                if (it == index.end()) {
                    throw ParseError("unknown vertex label '" + label + "' in annotation", row.line);
                }
                s.insert(it->second);
            }
        };
        fill(std::string_view(inner).substr(0, bar1), t.x);
        fill(std::string_view(inner).substr(bar1 + 1, bar2 - bar1 - 1), t.y);
        const auto w = words(std::string_view(inner).substr(bar2 + 1));
        if (w.size() != 1 || !to_number(w[0], t.w)) {
            throw ParseError("annotation weight must be a nonnegative integer", row.line);
        }
        if (t.x.intersects(t.y)) {
            throw ParseError("annotation sides overlap", row.line);
        }
        out.annotation.triples.push_back(std::move(t));
    }
    try {
        out.annotation.validate(n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
    return out;
}

} // namespace msok
