#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "maxenergy/graph.hpp"

namespace maxenergy {

/// Certified output of the extremal-energy pipeline for one order n.
struct ConstructionReport {
    std::size_t n = 0;
    std::uint64_t p = 0;
    bool window_ok = false;       // p <= n + n^{3/5}/2 (advisory)
    VertexSet x;                  // vertices of the host Paley graph kept
    std::size_t induced_edges = 0;
    double edge_target = 0.0;     // n(n-1)/4
    double energy_achieved = 0.0;
    double energy_floor = 0.0;    // lower estimate from interlacing, see below
    double target = 0.0;          // n^{3/2}/2 - n^{11/10}
    bool certified = false;       // energy_achieved >= target
    std::uint64_t seed = 0;
    std::size_t restarts_used = 0;
    std::string rng;              // pseudo-random generator identifier

    std::string to_text() const;
    std::string to_json() const;
};

inline constexpr std::size_t kDefaultRestartBudget = 20;

/// Best vertex set of size k found by seeded steepest-ascent search:
/// random k-subset, then repeatedly apply the in/out swap with the largest
/// strict gain in induced edges (ties broken by the lexicographically
/// smallest vertex pair), restarting on local optima. `budget` counts
/// restarts; each restart allows at most k^2 swaps. The result reduces over
/// restarts by (edge count, then lowest restart index).
VertexSet select_dense_subset(const Graph& g, std::size_t k, std::uint64_t seed,
                              std::size_t budget);

/// n^{3/2}/2 - n^{11/10}.
double construction_target(std::size_t n);

/// Full pipeline for order n >= 4: host prime p = find_prime_1mod4(n),
/// Paley graph G_p, dense n-subset X, induced graph, measured energy, and
/// the floor 2e(X)/n + (2e(X) - ((p-1)/2)^2) / ((sqrt(p)+1)/2) combining the
/// average-degree bound on sigma1 with the interlacing bounds
/// sigma1 <= (p-1)/2 and sigma2 <= (sqrt(p)+1)/2 of the host. Never
/// fabricates certification: certified=false is reported honestly.
ConstructionReport construct_max_energy_graph(std::size_t n, std::uint64_t seed,
                                              std::size_t budget = kDefaultRestartBudget);

}  // namespace maxenergy
