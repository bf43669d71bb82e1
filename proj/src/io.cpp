#include "romankit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace romankit {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

constexpr int kBias = 63;

void put_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    const int groups = n <= 258047 ? 3 : 6;
    out.push_back(126);
    if (groups == 6) out.push_back(126);
    for (int gidx = groups - 1; gidx >= 0; --gidx) out.push_back(static_cast<char>(((n >> (6 * gidx)) & 63) + kBias));
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    put_size(out, n);
    int acc = 0, used = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = used = 0;
            }
        }
    if (used) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) throw ParseError(0, "empty graph6 string");
    if (text.front() == ':' || text.front() == '&') throw ParseError(0, "sparse6/digraph6 input is not supported");
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError(0, "invalid graph6 byte " + std::to_string(static_cast<int>(c)));

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&](int groups) {
        if (pos + groups > text.size()) throw ParseError(0, "truncated graph6 size field");
        std::uint64_t v = 0;
        for (int i = 0; i < groups; ++i) v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - kBias);
        return v;
    };
    if (text[0] != 126) {
        n = take(1);
    } else if (text.size() > 1 && text[1] == 126) {
        pos = 2;
        n = take(6);
    } else {
        pos = 1;
        n = take(3);
    }

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError(0, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                std::to_string(bytes));
    Graph g(n);
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - kBias;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    return g;
}

namespace {

// Non-blank lines with comments stripped, tagged with their line number.
struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line line{number, {}};
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

long parse_int(const std::string& tok, std::size_t line) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
}

std::pair<std::size_t, std::size_t> header_counts(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError(0, "missing header line 'n m'");
    const Line& h = lines.front();
    if (h.tokens.size() != 2) throw ParseError(h.number, "header must be 'n m'");
    const long n = parse_int(h.tokens[0], h.number);
    const long m = parse_int(h.tokens[1], h.number);
    if (n < 0 || m < 0) throw ParseError(h.number, "counts must be non-negative");
    if (lines.size() - 1 != static_cast<std::size_t>(m))
        throw ParseError(lines.back().number, "header announces " + std::to_string(m) + " entries, found " +
                                                  std::to_string(lines.size() - 1));
    return {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
}

Vertex parse_vertex(const std::string& tok, std::size_t n, std::size_t line) {
    const long v = parse_int(tok, line);
    if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw ParseError(line, "vertex " + tok + " out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    return static_cast<Vertex>(v);
}

}  // namespace

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_edge_list(std::istream& in) {
    const auto lines = read_lines(in);
    const auto [n, m] = header_counts(lines);
    Graph g(n);
    std::set<Edge> seen;
    for (std::size_t i = 1; i <= m; ++i) {
        const Line& l = lines[i];
        if (l.tokens.size() != 2) throw ParseError(l.number, "edge line must be 'u v'");
        Vertex u = parse_vertex(l.tokens[0], n, l.number);
        Vertex v = parse_vertex(l.tokens[1], n, l.number);
        if (u == v) throw ParseError(l.number, "self-loop at vertex " + std::to_string(u));
        if (!seen.insert(std::minmax(u, v)).second) throw ParseError(l.number, "duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

std::string to_hypergraph_text(const Hypergraph& h) {
    std::ostringstream out;
    out << h.order() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

Hypergraph read_hypergraph(std::istream& in) {
    const auto lines = read_lines(in);
    const auto [n, m] = header_counts(lines);
    std::vector<VertexSet> edges;
    std::set<VertexSet> seen;
    for (std::size_t i = 1; i <= m; ++i) {
        const Line& l = lines[i];
        VertexSet e;
        for (const auto& tok : l.tokens) e.push_back(parse_vertex(tok, n, l.number));
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(l.number, "hyperedge repeats a vertex");
        if (!seen.insert(e).second) throw ParseError(l.number, "duplicate hyperedge");
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

std::string to_weight_text(const WeightFunction& f) {
    std::ostringstream out;
    out << f.k() << '\n';
    for (std::size_t v = 0; v < f.size(); ++v) out << (v ? " " : "") << f[static_cast<Vertex>(v)];
    out << '\n';
    return out.str();
}

WeightFunction read_weight_function(std::istream& in) {
    const auto lines = read_lines(in);
    if (lines.empty()) throw ParseError(0, "missing k line");
    if (lines[0].tokens.size() != 1) throw ParseError(lines[0].number, "first line must hold k alone");
    const long k = parse_int(lines[0].tokens[0], lines[0].number);
    if (k < 1) throw ParseError(lines[0].number, "k must be at least 1");
    if (lines.size() > 2) throw ParseError(lines[2].number, "weights must be on a single line");
    std::vector<int> w;
    if (lines.size() == 2)
        for (const auto& tok : lines[1].tokens) {
            const long x = parse_int(tok, lines[1].number);
            if (x < 0 || x > k) throw ParseError(lines[1].number, "weight " + tok + " outside [0, k]");
            w.push_back(static_cast<int>(x));
        }
    return WeightFunction(static_cast<int>(k), std::move(w));
}

std::string to_partition_text(const SplitPartition& p) {
    std::ostringstream out;
    out << 'K';
    for (Vertex v : p.clique) out << ' ' << v;
    out << "\nI";
    for (Vertex v : p.independent) out << ' ' << v;
    out << '\n';
    return out.str();
}

SplitPartition read_partition(std::istream& in) {
    const auto lines = read_lines(in);
    SplitPartition p;
    bool have_k = false, have_i = false;
    for (const auto& l : lines) {
        const std::string& tag = l.tokens[0];
        VertexSet* target = nullptr;
        if (tag == "K" && !have_k) {
            target = &p.clique;
            have_k = true;
        } else if (tag == "I" && !have_i) {
            target = &p.independent;
            have_i = true;
        } else {
            throw ParseError(l.number, "expected one 'K ...' line and one 'I ...' line");
        }
        for (std::size_t i = 1; i < l.tokens.size(); ++i) {
            const long v = parse_int(l.tokens[i], l.number);
            if (v < 0) throw ParseError(l.number, "negative vertex");
            target->push_back(static_cast<Vertex>(v));
        }
        std::sort(target->begin(), target->end());
    }
    if (!have_k || !have_i) throw ParseError(0, "partition needs both a 'K' and an 'I' line");
    return p;
}

}  // namespace romankit
