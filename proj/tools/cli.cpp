#include "cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include "msok/errors.hpp"
#include "msok/formula.hpp"
#include "msok/graph_io.hpp"
#include "msok/kernel_io.hpp"
#include "msok/kernelizer.hpp"
#include "msok/model_check.hpp"
#include "msok/modules.hpp"
#include "msok/rankwidth.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>

namespace msok::cli {
namespace {

using json = nlohmann::json;

struct RunConfig {
    std::string graph_path;
    std::string formula_path;
    int d = 1;
    std::optional<std::int64_t> r;
    std::string dir = "le";
    std::size_t cap_rw = default_rank_width_cap;
    std::size_t cap_game = GameLimits{}.max_vertices;
    int cap_rounds = GameLimits{}.max_rounds;
    std::size_t cap_rep = KernelConfig{}.rep_cap;
    std::size_t cap_opt = KernelConfig{}.opt_cap;
    std::size_t cap_solve = default_solve_cap;
    bool auto_solve = false;
    bool verbose = false;
    bool json = false;
    std::string output;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

KernelConfig kernel_config(const RunConfig& c)
{
    KernelConfig k;
    k.rw_cap = c.cap_rw;
    k.game = GameLimits{c.cap_game, c.cap_rounds};
    k.rep_cap = c.cap_rep;
    k.opt_cap = c.cap_opt;
    return k;
}

std::string read_input(const std::string& path)
{
    try {
        return read_text_file(path);
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
}

bool is_kernel_document(const std::string& text)
{
    std::istringstream in(text);
    for (std::string word; in >> word;) {
        if (word == "module" || word == "annotation" || word == "threshold" || word == "direction") {
            return true;
        }
        std::string rest;
        std::getline(in, rest);
    }
    return false;
}

Graph load_graph(const std::string& path, spdlog::logger& log)
{
    std::vector<std::string> warnings;
    Graph g;
    try {
        const std::string text = read_input(path);
        g = is_kernel_document(text) ? parse_annotated(text).graph : parse_graph(text, &warnings);
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + std::to_string(e.line()) + ": " + e.what());
    }
    for (const auto& w : warnings) {
        log.warn("{}: {}", path, w);
    }
    log.info("read {} with {} vertices and {} edges", path, g.order(), g.edge_count());
    return g;
}

Formula load_formula(const std::string& path)
{
    try {
        return parse_formula(read_input(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": "
                         + e.what());
    }
}

Direction direction_of(const RunConfig& c)
{
    auto d = parse_direction(c.dir);
    if (!d) {
        throw UsageError("--dir must be le or ge");
    }
    return *d;
}

json label_list(const Graph& g, const VertexSet& s)
{
    json out = json::array();
    s.for_each([&](Vertex v) { out.push_back(g.label(v)); });
    return out;
}

std::string label_line(const Graph& g, const VertexSet& s)
{
    std::string out;
    s.for_each([&](Vertex v) { out += " " + g.label(v); });
    return out;
}

json graph_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u + 1, v + 1});
    }
    json labels = json::array();
    for (Vertex v = 0; v < g.order(); ++v) {
        labels.push_back(g.label(v));
    }
    return {{"vertices", g.order()}, {"labels", labels}, {"edges", edges}};
}

json optimum_json(const std::optional<std::uint64_t>& opt)
{
    return opt ? json(*opt) : json(nullptr);
}

std::string optimum_text(const std::optional<std::uint64_t>& opt)
{
    return "optimum " + (opt ? std::to_string(*opt) : std::string("none")) + "\n";
}

class Runner {
public:
    Runner(const RunConfig& c, std::ostream& out, spdlog::logger& log) : c_(c), out_(out), log_(log) {}

    int cover()
    {
        const Graph g = load_graph(c_.graph_path, log_);
        const Cover cover = rankwidth_cover(g, c_.d, c_.cap_rw);
        if (c_.json) {
            json classes = json::array();
            for (const auto& cls : cover.classes) {
                classes.push_back(label_list(g, cls));
            }
            emit(json{{"d", c_.d}, {"k", cover.size()}, {"classes", classes}}.dump(2) + "\n");
        } else {
            std::string text = "k " + std::to_string(cover.size()) + "\n";
            for (std::size_t i = 0; i < cover.size(); ++i) {
                text += "class " + std::to_string(i + 1) + ":" + label_line(g, cover.classes[i]) + "\n";
            }
            emit(text);
        }
        return ok;
    }

    int rankwidth()
    {
        const Graph g = load_graph(c_.graph_path, log_);
        const auto result = rank_width(g, {c_.cap_rw, c_.verbose});
        std::function<json(int)> tree_json = [&](int id) -> json {
            const auto& node = result.witness->nodes[static_cast<std::size_t>(id)];
            if (node.is_leaf()) {
                return g.label(node.members.first());
            }
            return json::array({tree_json(node.left), tree_json(node.right)});
        };
        std::function<std::string(int)> tree_text = [&](int id) -> std::string {
            const auto& node = result.witness->nodes[static_cast<std::size_t>(id)];
            if (node.is_leaf()) {
                return g.label(node.members.first());
            }
            return "(" + tree_text(node.left) + " " + tree_text(node.right) + ")";
        };
        const bool tree = c_.verbose && result.witness && g.order() > 0;
        if (c_.json) {
            json j{{"rank_width", result.width}};
            if (tree) {
                j["witness"] = tree_json(result.witness->root);
            }
            emit(j.dump(2) + "\n");
        } else {
            std::string text = "rank-width " + std::to_string(result.width) + "\n";
            if (tree) {
                text += "witness " + tree_text(result.witness->root) + "\n";
            }
            emit(text);
        }
        return ok;
    }

    int check()
    {
        const Graph g = load_graph(c_.graph_path, log_);
        const Formula phi = load_formula(c_.formula_path);
        if (!phi.is_sentence()) {
            throw UsageError("check needs a sentence; the formula has free set variables");
        }
        const bool verdict = model_check(g, phi);
        if (c_.json) {
            emit(json{{"verdict", verdict}, {"quantifier_rank", quantifier_rank(phi)}}.dump(2) + "\n");
        } else {
            emit(verdict ? "true\n" : "false\n");
        }
        return verdict ? ok : false_verdict;
    }

    int kernelize_mc()
    {
        const Graph g = load_graph(c_.graph_path, log_);
        const Formula phi = load_formula(c_.formula_path);
        if (!phi.is_sentence()) {
            throw UsageError("kernelize-mc needs a sentence; the formula has free set variables");
        }
        const McKernel k = msok::kernelize_mc(g, phi, c_.d, kernel_config(c_));
        log_.info("kernel has {} vertices in {} modules (q = {})", k.graph.order(), k.modules.size(), k.q);
        if (c_.json) {
            json modules = json::array();
            for (const auto& m : k.modules) {
                modules.push_back(label_list(k.graph, m));
            }
            json classes = json::array();
            for (const auto& cls : k.classes) {
                classes.push_back(label_list(g, cls));
            }
            emit(json{{"q", k.q}, {"d", k.d}, {"k", k.modules.size()}, {"graph", graph_json(k.graph)},
                      {"classes", classes}, {"modules", modules}}
                     .dump(2)
                 + "\n");
        } else {
            emit(emit_kernel(k));
        }
        return ok;
    }

    int kernelize_opt()
    {
        const Graph g = load_graph(c_.graph_path, log_);
        const Formula phi = load_formula(c_.formula_path);
        require_one_free_set(phi);
        if (!c_.r) {
            throw UsageError("kernelize-opt needs a threshold -r");
        }
        const Direction dir = direction_of(c_);
        if (c_.auto_solve) {
            const Cover cover = rankwidth_cover(g, c_.d, c_.cap_rw);
            if (cover.size() < 64 && (std::uint64_t{1} << cover.size()) <= g.order()) {
                log_.info("2^k = 2^{} <= n = {}: solving directly", cover.size(), g.order());
                return report(solve_opt(g, phi, dir, c_.cap_solve), dir, *c_.r);
            }
        }
        const AnnotatedInstance a = msok::kernelize_opt(g, phi, dir, *c_.r, c_.d, kernel_config(c_));
        log_.info("annotated kernel has {} vertices, {} modules and {} triples", a.graph.order(), a.modules.size(),
                  a.annotation.triples.size());
        if (c_.json) {
            emit(annotated_json(a).dump(2) + "\n");
        } else {
            emit(emit_annotated(a));
        }
        return ok;
    }

    int solve()
    {
        const std::string text = read_input(c_.graph_path);
        const Formula phi = load_formula(c_.formula_path);
        require_one_free_set(phi);
        if (is_kernel_document(text)) {
            AnnotatedInstance a;
            try {
                a = parse_annotated(text);
            } catch (const ParseError& e) {
                throw UsageError(c_.graph_path + ":" + std::to_string(e.line()) + ": " + e.what());
            }
            log_.info("solving annotated instance with {} vertices", a.graph.order());
            return report(solve_annotated(a, phi, c_.cap_solve), a.direction, a.r);
        }
        const Graph g = load_graph(c_.graph_path, log_);
        const auto opt = solve_opt(g, phi, direction_of(c_), c_.cap_solve);
        if (c_.r) {
            return report(opt, direction_of(c_), *c_.r);
        }
        if (c_.json) {
            emit(json{{"optimum", optimum_json(opt)}}.dump(2) + "\n");
        } else {
            emit(optimum_text(opt));
        }
        return ok;
    }

private:
    static void require_one_free_set(const Formula& phi)
    {
        if (phi.free_set_count() != 1) {
            throw UsageError("the formula must declare exactly one free set variable (a 'free X' line)");
        }
    }

    int report(const std::optional<std::uint64_t>& opt, Direction dir, std::int64_t r)
    {
        const bool verdict = meets_threshold(opt, dir, r);
        if (c_.json) {
            emit(json{{"optimum", optimum_json(opt)}, {"direction", to_string(dir)}, {"threshold", r},
                      {"verdict", verdict}}
                     .dump(2)
                 + "\n");
        } else {
            emit(optimum_text(opt) + "verdict " + (verdict ? "true" : "false") + "\n");
        }
        return verdict ? ok : false_verdict;
    }

    static json annotated_json(const AnnotatedInstance& a)
    {
        json modules = json::array();
        for (const auto& m : a.modules) {
            modules.push_back(label_list(a.graph, m));
        }
        json triples = json::array();
        for (const auto& t : a.annotation.triples) {
            triples.push_back({{"X", label_list(a.graph, t.x)}, {"Y", label_list(a.graph, t.y)}, {"w", t.w}});
        }
        return {{"graph", graph_json(a.graph)}, {"modules", modules},   {"annotation", triples},
                {"threshold", a.r},            {"direction", to_string(a.direction)},
                {"encoding_bits", encoding_bits(a.annotation)}};
    }

    void emit(const std::string& text)
    {
        if (c_.output.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(c_.output, std::ios::binary);
        if (!file || !(file << text)) {
            throw UsageError("cannot write " + c_.output);
        }
        log_.info("wrote {}", c_.output);
    }

    const RunConfig& c_;
    std::ostream& out_;
    spdlog::logger& log_;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err, bool verbose)
{
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto log = std::make_shared<spdlog::logger>("msok", sink);
    log->set_pattern("msok: %l: %v");
    auto level = verbose ? spdlog::level::info : spdlog::level::warn;
    if (const char* env = std::getenv("MSOK_LOG"); env != nullptr && *env != '\0') {
        const auto parsed = spdlog::level::from_str(env);
        if (parsed != spdlog::level::off || std::string_view(env) == "off") {
            level = parsed;
        }
    }
    log->set_level(level);
    return log;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Rank-width covers and MSO kernels for small graphs", "msok"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    auto add_graph = [&](CLI::App* sub, const char* what) {
        sub->add_option("graph", c.graph_path, what)->required();
    };
    auto add_formula = [&](CLI::App* sub) {
        sub->add_option("formula", c.formula_path, "Formula file")->required();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", c.json, "Write JSON instead of text");
        sub->add_option("-o,--output", c.output, "Write the result to this file");
        sub->add_flag("-v,--verbose", c.verbose, "Log progress to stderr");
    };
    auto add_d = [&](CLI::App* sub) {
        sub->add_option("-d", c.d, "Rank-width bound of the cover classes")->capture_default_str()
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--cap-rw", c.cap_rw, "Largest module handed to the exact rank-width search")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    };
    auto add_kernel_caps = [&](CLI::App* sub) {
        sub->add_option("--cap-game", c.cap_game, "Largest module whose MSO type is computed")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--cap-rounds", c.cap_rounds, "Highest quantifier rank for type computation")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--cap-rep", c.cap_rep, "Largest representative searched for")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    };
    auto add_opt = [&](CLI::App* sub) {
        sub->add_option("-r", c.r, "Threshold of the decision version");
        sub->add_option("--dir", c.dir, "Minimize (le) or maximize (ge)")
            ->capture_default_str()
            ->check(CLI::IsMember({"le", "ge"}));
        sub->add_option("--cap-solve", c.cap_solve, "Largest graph for brute-force solving")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    };

    auto* cover = app.add_subcommand("cover", "Smallest rank-width-d cover");
    add_graph(cover, "Graph file");
    add_d(cover);
    add_common(cover);

    auto* rw = app.add_subcommand("rankwidth", "Exact rank-width (witness with --verbose)");
    add_graph(rw, "Graph file");
    rw->add_option("--cap-rw", c.cap_rw, "Largest graph for the exact search")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_common(rw);

    auto* check = app.add_subcommand("check", "Model-check a sentence");
    add_graph(check, "Graph file");
    add_formula(check);
    add_common(check);

    auto* kmc = app.add_subcommand("kernelize-mc", "Kernel for model checking a sentence");
    add_graph(kmc, "Graph file");
    add_formula(kmc);
    add_d(kmc);
    add_kernel_caps(kmc);
    add_common(kmc);

    auto* kopt = app.add_subcommand("kernelize-opt", "Annotated kernel for MSO optimization");
    add_graph(kopt, "Graph file");
    add_formula(kopt);
    add_d(kopt);
    add_kernel_caps(kopt);
    add_opt(kopt);
    kopt->add_option("--cap-opt", c.cap_opt, "Largest class searched for matching subsets")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    kopt->add_flag("--auto-solve", c.auto_solve, "Solve outright when 2^k <= n");
    add_common(kopt);

    auto* solve = app.add_subcommand("solve", "Brute-force optimum on a graph or a kernel document");
    add_graph(solve, "Graph file or kernel document");
    add_formula(solve);
    add_opt(solve);
    add_common(solve);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    auto log = make_logger(err, c.verbose);
    Runner runner(c, out, *log);
    try {
        if (cover->parsed()) {
            return runner.cover();
        }
        if (rw->parsed()) {
            return runner.rankwidth();
        }
        if (check->parsed()) {
            return runner.check();
        }
        if (kmc->parsed()) {
            return runner.kernelize_mc();
        }
        if (kopt->parsed()) {
            return runner.kernelize_opt();
        }
        return runner.solve();
    } catch (const CapExceeded& e) {
        log->error("{}", e.what());
        return cap_exceeded;
    } catch (const UsageError& e) {
        log->error("{}", e.what());
        return usage_error;
    } catch (const std::invalid_argument& e) {
        log->error("{}", e.what());
        return usage_error;
    }
}

} // namespace msok::cli
