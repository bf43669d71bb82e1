#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "romankit/constructions.hpp"
#include "romankit/domination.hpp"
#include "romankit/hypergraph.hpp"
#include "romankit/io.hpp"
#include "romankit/verifier.hpp"

namespace romankit::cli {

namespace {

using nlohmann::json;

// Input problems that are not tied to a line of the input.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

std::string extension(const std::string& path) {
    const auto dot = path.rfind('.');
    if (dot == std::string::npos || path.find('/', dot) != std::string::npos) return "";
    return path.substr(dot);
}

enum class Format { graph6, edge_list, hypergraph };

Format parse_format(const std::string& name) {
    if (name == "g6" || name == "graph6") return Format::graph6;
    if (name == "el" || name == "edgelist" || name == "edge-list") return Format::edge_list;
    if (name == "hg" || name == "hypergraph") return Format::hypergraph;
    throw InputError("unknown format '" + name + "' (use g6, el or hg)");
}

// First line that is neither blank nor a comment, with its number.
std::pair<std::size_t, std::string> first_content_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        const std::string content = line.substr(0, line.find('#'));
        if (content.find_first_not_of(" \t\r") != std::string::npos) return {number, content};
    }
    return {0, ""};
}

Format detect(const std::string& path, const std::string& text) {
    const std::string ext = extension(path);
    if (ext == ".g6") return Format::graph6;
    if (ext == ".el") return Format::edge_list;
    if (ext == ".hg") return Format::hypergraph;
    // a header "n m" means an edge list, anything else is taken as graph6
    std::istringstream first(first_content_line(text).second);
    std::vector<std::string> toks;
    for (std::string t; first >> t;) toks.push_back(t);
    const bool numeric = toks.size() == 2 && std::all_of(toks.begin(), toks.end(), [](const std::string& t) {
                             return std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
                         });
    return numeric ? Format::edge_list : Format::graph6;
}

Graph parse_graph6_text(const std::string& text) {
    const auto [number, content] = first_content_line(text);
    if (number == 0) throw ParseError(0, "empty graph6 input");
    std::istringstream rest(text);
    std::string line;
    for (std::size_t n = 1; std::getline(rest, line); ++n) {
        if (n <= number) continue;
        if (line.substr(0, line.find('#')).find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError(n, "expected a single graph6 string");
    }
    const auto begin = content.find_first_not_of(" \t");
    const auto end = content.find_last_not_of(" \t\r");
    try {
        return from_graph6(std::string_view(content).substr(begin, end - begin + 1));
    } catch (const ParseError& e) {
        throw ParseError(number, e.what());
    }
}

struct Source {
    std::string path;
    std::string format;  // empty: auto-detect
};

Graph load_graph(const Source& src, std::istream& in) {
    const std::string text = slurp(src.path, in);
    const Format f = src.format.empty() ? detect(src.path, text) : parse_format(src.format);
    if (f == Format::hypergraph) throw InputError("expected a graph, got hypergraph input");
    if (f == Format::graph6) return parse_graph6_text(text);
    std::istringstream s(text);
    return read_edge_list(s);
}

Hypergraph load_hypergraph(const Source& src, std::istream& in) {
    const std::string text = slurp(src.path, in);
    if (!src.format.empty() && parse_format(src.format) != Format::hypergraph)
        throw InputError("expected hypergraph input");
    std::istringstream s(text);
    return read_hypergraph(s);
}

std::string join(const VertexSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out;
}

std::string join(const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out;
}

json partition_json(const SplitPartition& p) { return json{{"clique", p.clique}, {"independent", p.independent}}; }

struct Context {
    std::istream& in;
    std::ostream& out;
    bool as_json = false;
    std::string output_format = "g6";

    void emit(const json& j) { out << j.dump() << '\n'; }

    void write_graph(const Graph& g, const SplitPartition* p) {
        if (as_json) {
            json j{{"graph6", to_graph6(g)}, {"n", g.order()}, {"edges", g.edges()}};
            if (p) j["partition"] = partition_json(*p);
            emit(j);
            return;
        }
        if (parse_format(output_format) == Format::edge_list)
            out << to_edge_list(g);
        else if (parse_format(output_format) == Format::graph6)
            out << to_graph6(g) << '\n';
        else
            throw InputError("graphs cannot be written in hypergraph format");
    }
};

void require_k(int k, int lo) {
    if (k < lo) throw InputError("--k must be at least " + std::to_string(lo));
}

int do_gamma(Context& c, const Source& src) {
    const auto cert = gamma(load_graph(src, c.in));
    if (c.as_json)
        c.emit({{"gamma", cert.gamma}, {"witness", cert.witness}});
    else
        c.out << "gamma " << cert.gamma << "\nwitness " << join(cert.witness) << '\n';
    return 0;
}

int do_gamma_rk(Context& c, const Source& src, int k) {
    require_k(k, 1);
    const auto cert = gamma_rk(load_graph(src, c.in), k);
    if (c.as_json)
        c.emit({{"k", k}, {"gamma_rk", cert.gamma_rk}, {"function", cert.witness.weights()}});
    else
        c.out << "gamma_rk " << cert.gamma_rk << "\nfunction " << join(cert.witness.weights()) << '\n';
    return 0;
}

int do_classify(Context& c, const Source& src, int k) {
    require_k(k, 2);
    const Graph g = load_graph(src, c.in);
    const int dom = gamma(g).gamma;
    const int rk = gamma_rk(g, k).gamma_rk;
    const bool roman = rk == k * dom;
    if (c.as_json)
        c.emit({{"k", k}, {"gamma", dom}, {"gamma_rk", rk}, {"k_roman", roman}});
    else
        c.out << "gamma " << dom << "\ngamma_rk " << rk << "\nk_roman " << (roman ? "true" : "false") << '\n';
    return roman ? 0 : 1;
}

int do_check_function(Context& c, const Source& src, int k, const std::string& function_path) {
    require_k(k, 1);
    const Graph g = load_graph(src, c.in);
    std::ifstream file(function_path);
    if (!file) throw InputError("cannot open '" + function_path + "'");
    WeightFunction f = [&] {
        try {
            return read_weight_function(file);
        } catch (const ParseError& e) {
            throw InputError(function_path + ": " + e.what());
        }
    }();
    if (f.k() != k) throw InputError("function file is for k = " + std::to_string(f.k()) + ", not " + std::to_string(k));
    if (f.size() != g.order())
        throw InputError("function has " + std::to_string(f.size()) + " weights for " + std::to_string(g.order()) +
                         " vertices");
    const bool valid = is_krdf(g, f);
    if (c.as_json)
        c.emit({{"k", k}, {"valid", valid}, {"weight", f.weight()}});
    else
        c.out << "valid " << (valid ? "true" : "false") << "\nweight " << f.weight() << '\n';
    return valid ? 0 : 1;
}

int do_split_partition(Context& c, const Source& src) {
    const auto p = find_split_partition(load_graph(src, c.in));
    if (c.as_json) {
        json j{{"split", p.has_value()}};
        if (p) j["partition"] = partition_json(*p);
        c.emit(j);
    } else {
        c.out << "split " << (p ? "true" : "false") << '\n';
        if (p) c.out << to_partition_text(*p);
    }
    return p ? 0 : 1;
}

int do_decompose(Context& c, const Source& src, const std::string& partition_path) {
    Graph g = load_graph(src, c.in);
    const bool defaulted = partition_path.empty();
    SplitLabeledGraph sg = [&] {
        if (defaulted) return SplitLabeledGraph::with_default_partition(std::move(g));
        std::ifstream file(partition_path);
        if (!file) throw InputError("cannot open '" + partition_path + "'");
        try {
            return SplitLabeledGraph::make(std::move(g), read_partition(file));
        } catch (const ParseError& e) {
            throw InputError(partition_path + ": " + e.what());
        }
    }();
    const auto d = split_join_decompose(sg);
    if (c.as_json) {
        json factors = json::array();
        for (const auto& f : d.factors)
            factors.push_back({{"vertices", f.original},
                               {"graph6", to_graph6(f.factor.graph)},
                               {"partition", partition_json(f.factor.partition)}});
        c.emit({{"partition", partition_json(sg.partition)},
                {"default_partition", defaulted},
                {"prime", d.prime()},
                {"factors", factors}});
        return 0;
    }
    c.out << to_partition_text(sg.partition);
    if (defaulted) c.out << "note: default maximum-clique partition; other partitions may decompose differently\n";
    c.out << "factors " << d.factors.size() << '\n';
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        const auto& f = d.factors[i];
        VertexSet k, ind;
        for (Vertex v : f.factor.partition.clique) k.push_back(f.original[v]);
        for (Vertex v : f.factor.partition.independent) ind.push_back(f.original[v]);
        c.out << "factor " << i << ": vertices " << join(f.original) << " | K " << join(k) << " | I " << join(ind)
              << " | " << to_graph6(f.factor.graph) << '\n';
    }
    c.out << "prime " << (d.prime() ? "true" : "false") << '\n';
    return 0;
}

int do_pm(Context& c, const Source& src) {
    const auto m = perfect_matching(load_hypergraph(src, c.in));
    if (c.as_json) {
        json j{{"perfect_matching", m.has_value()}};
        if (m) j["edges"] = *m;
        c.emit(j);
    } else {
        c.out << "perfect_matching " << (m ? "true" : "false") << '\n';
        if (m) {
            c.out << "edges";
            for (auto e : *m) c.out << ' ' << e;
            c.out << '\n';
        }
    }
    return m ? 0 : 1;
}

int do_rho(Context& c, const Source& src) {
    const Hypergraph h = load_hypergraph(src, c.in);
    if (has_isolated_vertex(h)) throw InputError("hypergraph has an isolated vertex, so no edge cover exists");
    const int rho = edge_cover_number(h);
    if (c.as_json)
        c.emit({{"rho", rho}});
    else
        c.out << "rho " << rho << '\n';
    return 0;
}

int do_verify(Context& c, const std::string& suite, const verify::Budget& budget) {
    const auto names = verify::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string all;
        for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
        throw InputError("unknown suite '" + suite + "' (known: " + all + ")");
    }
    const auto report = verify::run_suite(suite, budget);
    if (c.as_json) {
        c.emit(json(report));
    } else {
        c.out << "suite " << suite << ": " << (report.passed ? "pass" : "fail") << " (" << report.checked
              << " instances checked)\n";
        if (report.counterexample) {
            const auto& ce = *report.counterexample;
            c.out << "property " << ce.property << "\ninstance " << ce.instance.dump() << "\nobserved "
                  << ce.observed.dump() << "\nexpected " << ce.expected.dump() << '\n';
        }
    }
    return report.passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact {k}-Roman domination toolkit", "romankit"};
    app.require_subcommand(1);

    Context ctx{in, out};
    std::string format;
    app.add_flag("--json", ctx.as_json, "Machine-readable JSON output");
    app.add_option("--format", format, "Input format: g6, el or hg (default: by extension, else sniffed)");
    app.add_option("--output-format", ctx.output_format, "Graph output format for gen: g6 or el");

    std::string input;
    int k = 0;
    std::function<int()> action;

    auto with_input = [&](CLI::App* sub) { sub->add_option("input", input, "Input file, '-' or absent for stdin"); };
    auto src = [&] { return Source{input, format}; };

    auto* g = app.add_subcommand("gamma", "Domination number and a minimum dominating set");
    with_input(g);
    g->callback([&] { action = [&] { return do_gamma(ctx, src()); }; });

    auto* grk = app.add_subcommand("gamma-rk", "{k}-Roman domination number and an optimal function");
    with_input(grk);
    grk->add_option("--k", k)->required();
    grk->callback([&] { action = [&] { return do_gamma_rk(ctx, src(), k); }; });

    auto* cls = app.add_subcommand("classify", "Decide whether gamma_rk = k * gamma (exit 1 when not)");
    with_input(cls);
    cls->add_option("--k", k)->required();
    cls->callback([&] { action = [&] { return do_classify(ctx, src(), k); }; });

    std::string function_path;
    auto* chk = app.add_subcommand("check-function", "Check a weight function (exit 1 when invalid)");
    with_input(chk);
    chk->add_option("--k", k)->required();
    chk->add_option("--function", function_path, "Weight function file")->required();
    chk->callback([&] { action = [&] { return do_check_function(ctx, src(), k, function_path); }; });

    auto* sp = app.add_subcommand("split-partition", "Recognise a split graph (exit 1 when not split)");
    with_input(sp);
    sp->callback([&] { action = [&] { return do_split_partition(ctx, src()); }; });

    std::string partition_path;
    auto* dec = app.add_subcommand("decompose", "Split-join decomposition");
    with_input(dec);
    dec->add_option("--partition", partition_path, "Partition file with 'K ...' and 'I ...' lines");
    dec->callback([&] { action = [&] { return do_decompose(ctx, src(), partition_path); }; });

    int t = 0;
    auto* gen = app.add_subcommand("gen", "Generate graphs");
    gen->require_subcommand(1);
    auto* gsun = gen->add_subcommand("sun", "t-sun");
    gsun->add_option("--t", t)->required();
    gsun->callback([&] {
        action = [&] {
            const auto s = sun(t);
            ctx.write_graph(s.graph, &s.partition);
            return 0;
        };
    });
    auto* gcosun = gen->add_subcommand("cosun", "complement of the t-sun");
    gcosun->add_option("--t", t)->required();
    gcosun->callback([&] {
        action = [&] {
            const auto s = co_sun(t);
            ctx.write_graph(s.graph, &s.partition);
            return 0;
        };
    });
    auto* gmid = gen->add_subcommand("middle", "middle graph of a graph");
    with_input(gmid);
    gmid->callback([&] {
        action = [&] {
            ctx.write_graph(middle_graph(load_graph(src(), ctx.in)), nullptr);
            return 0;
        };
    });
    auto* ginc = gen->add_subcommand("incidence", "bipartite incidence graph of a hypergraph");
    with_input(ginc);
    ginc->callback([&] {
        action = [&] {
            ctx.write_graph(incidence_graph(load_hypergraph(src(), ctx.in)), nullptr);
            return 0;
        };
    });
    auto* gcs = gen->add_subcommand("compat-split", "split compatible graph of a hypergraph");
    with_input(gcs);
    gcs->callback([&] {
        action = [&] {
            const auto [graph, p] = compatible_split(load_hypergraph(src(), ctx.in));
            ctx.write_graph(graph, &p);
            return 0;
        };
    });
    auto* gred = gen->add_subcommand("reduce", "reduction of a k-uniform hypergraph to a split graph");
    with_input(gred);
    gred->add_option("--k", k)->required();
    gred->callback([&] {
        action = [&] {
            require_k(k, 1);
            const auto r = exact_cover_reduction(load_hypergraph(src(), ctx.in), k);
            ctx.write_graph(r.graph, &r.partition);
            return 0;
        };
    });

    auto* hyper = app.add_subcommand("hyper", "Hypergraph solvers");
    hyper->require_subcommand(1);
    auto* hpm = hyper->add_subcommand("pm", "perfect matching (exit 1 when none)");
    with_input(hpm);
    hpm->callback([&] { action = [&] { return do_pm(ctx, src()); }; });
    auto* hrho = hyper->add_subcommand("rho", "edge cover number");
    with_input(hrho);
    hrho->callback([&] { action = [&] { return do_rho(ctx, src()); }; });

    std::string suite;
    verify::Budget budget;
    auto* ver = app.add_subcommand("verify", "Run a verification suite (exit 1 on a counterexample)");
    ver->add_option("--suite", suite)->required();
    ver->add_option("--max-n", budget.max_n, "largest graph order");
    ver->add_option("--max-t", budget.max_t, "largest sun size");
    ver->add_option("--max-k", budget.max_k, "largest k");
    ver->add_option("--hyper-max-v", budget.hyper_max_v, "exhaustive hypergraph order");
    ver->add_option("--hyper-max-e", budget.hyper_max_e, "exhaustive hypergraph edge count");
    ver->add_option("--random", budget.random_hypergraphs, "seeded random hypergraphs per k");
    ver->add_option("--random-max-v", budget.random_max_v);
    ver->add_option("--random-max-e", budget.random_max_e);
    ver->add_option("--factor-max-n", budget.factor_max_n, "largest split-join factor");
    ver->add_option("--reductions", budget.reduction_instances, "reduction-soundness instance count");
    ver->add_option("--seed", budget.seed);
    ver->callback([&] { action = [&] { return do_verify(ctx, suite, budget); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    try {
        return action();
    } catch (const ParseError& e) {
        err << "error: " << (input.empty() || input == "-" ? std::string("<stdin>") : input) << ": " << e.what()
            << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

}  // namespace romankit::cli
