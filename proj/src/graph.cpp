#include "maxenergy/graph.hpp"

#include <bit>
#include <charconv>
#include <sstream>

#include "maxenergy/errors.hpp"
#include "maxenergy/number_theory.hpp"
#include "maxenergy/spectra.hpp"

namespace maxenergy {

Graph::Graph(std::size_t order)
    : n_(order), words_((order + 63) / 64), bits_(order * ((order + 63) / 64), 0) {
    if (order == 0) throw DimensionError("graph order must be at least 1");
}

void Graph::check_vertex(std::size_t u) const {
    if (u >= n_) throw DomainError("vertex index out of range");
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loops are not allowed");
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::degree(std::size_t u) const {
    check_vertex(u);
    std::size_t deg = 0;
    for (std::size_t w = 0; w < words_; ++w)
        deg += static_cast<std::size_t>(std::popcount(bits_[u * words_ + w]));
    return deg;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
}

std::span<const std::uint64_t> Graph::row_bits(std::size_t u) const {
    check_vertex(u);
    return {bits_.data() + u * words_, words_};
}

Graph paley_graph(std::uint64_t p) {
    if (!is_prime(p) || p % 4 != 1)
        throw DomainError("Paley graph requires a prime p == 1 (mod 4)");
    const std::size_t n = static_cast<std::size_t>(p);
    std::vector<bool> residue(n, false);
    for (std::uint64_t k = 1; k <= (p - 1) / 2; ++k)
        residue[static_cast<std::size_t>(detail::mulmod(k, k, p))] = true;

    Graph g(n);
    // p == 1 (mod 4) makes -1 a residue, so (i-j) and (j-i) agree.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (residue[j - i]) g.add_edge(i, j);
    return g;
}

namespace {

void validate_vertex_set(const Graph& g, const VertexSet& x) {
    if (x.empty()) throw DomainError("vertex set must not be empty");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] >= g.order()) throw DomainError("vertex index out of range");
        if (i > 0 && x[i] <= x[i - 1])
            throw DomainError("vertex set must be sorted ascending without duplicates");
    }
}

}  // namespace

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    validate_vertex_set(g, x);
    Graph sub(x.size());
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b)
            if (g.has_edge(x[a], x[b])) sub.add_edge(a, b);
    return sub;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    Graph c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

RealMatrix adjacency_matrix(const Graph& g) {
    const std::size_t n = g.order();
    RealMatrix a(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) {
                a(i, j) = 1.0;
                a(j, i) = 1.0;
            }
    return a;
}

double graph_energy(const Graph& g) { return energy(adjacency_matrix(g)); }

namespace {

struct Line {
    std::string text;
    std::size_t number;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        out.push_back({line, no});
    }
    return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line_no) {
    std::size_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("invalid integer token '" + tok + "'", line_no);
    return v;
}

std::pair<std::size_t, std::size_t> two_indices(const std::string& line,
                                                std::size_t line_no) {
    std::istringstream in(line);
    std::string a, b, extra;
    if (!(in >> a >> b))
        throw ParseError("expected two integers", line_no);
    if (in >> extra)
        throw ParseError("unexpected trailing token '" + extra + "'", line_no);
    return {parse_index(a, line_no), parse_index(b, line_no)};
}

}  // namespace

Graph parse_graph(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty graph input", 1);

    const auto [n, m] = two_indices(lines[0].text, lines[0].number);
    if (n == 0) throw ParseError("graph order must be at least 1", lines[0].number);
    if (m > n * (n - 1) / 2)
        throw ParseError("edge count exceeds the simple-graph maximum", lines[0].number);

    if (lines.size() < m + 1) {
        const std::size_t last = lines.back().number;
        throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(lines.size() - 1),
                         last);
    }
    if (lines.size() > m + 1)
        throw ParseError("unexpected content after edge list", lines[m + 1].number);

    Graph g(n);
    for (std::size_t i = 0; i < m; ++i) {
        const Line& line = lines[i + 1];
        const auto [u, v] = two_indices(line.text, line.number);
        if (u == v) throw ParseError("self-loop", line.number);
        if (u > v) throw ParseError("edges must satisfy u < v", line.number);
        if (v >= n) throw ParseError("vertex index out of range", line.number);
        if (g.has_edge(u, v)) throw ParseError("duplicate edge", line.number);
        g.add_edge(u, v);
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace maxenergy
