#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maxenergy/matrix.hpp"

namespace maxenergy {

/// Vertex indices, sorted ascending, no duplicates.
using VertexSet = std::vector<std::size_t>;

/// Simple undirected graph on n >= 1 vertices; adjacency stored as packed
/// 64-bit rows. Treated as immutable once built: every free function below
/// returns a new graph.
class Graph {
public:
    explicit Graph(std::size_t order);

    std::size_t order() const noexcept { return n_; }
    bool has_edge(std::size_t u, std::size_t v) const;
    /// Adds the undirected edge {u, v}. Self-loops and out-of-range indices
    /// are DomainErrors; adding an existing edge is a no-op.
    void add_edge(std::size_t u, std::size_t v);
    std::size_t degree(std::size_t u) const;
    std::size_t edge_count() const;

    std::span<const std::uint64_t> row_bits(std::size_t u) const;
    std::size_t words_per_row() const noexcept { return words_; }

private:
    void check_vertex(std::size_t u) const;

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Paley graph of prime order p == 1 (mod 4): vertices 0..p-1, edge {i, j}
/// iff (i - j) mod p is a nonzero quadratic residue. (p-1)/2-regular.
Graph paley_graph(std::uint64_t p);

/// Subgraph induced by x; output vertex i corresponds to x[i]. x must be
/// sorted ascending, duplicate-free and within range.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

Graph complement(const Graph& g);

/// 0/1 symmetric adjacency matrix with zero diagonal.
RealMatrix adjacency_matrix(const Graph& g);

/// Sum of singular values of the adjacency matrix.
double graph_energy(const Graph& g);

/// Edge-list format: line 1 "n m", then m lines "u v" with u < v, 0-based.
/// Blank lines and lines starting with '#' are ignored; everything else is
/// strict and errors carry the offending line number.
Graph parse_graph(const std::string& text);

/// Canonical form: "n m" header, edges sorted lexicographically, u < v.
std::string serialize_graph(const Graph& g);

}  // namespace maxenergy
