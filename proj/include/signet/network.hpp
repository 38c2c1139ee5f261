#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "signet/coverage.hpp"

namespace signet {

/// One passing fit attached to a network node.
struct NodeFit {
    std::uint32_t function_index = 0;
    double delta = 0.0;
    double sigma = 1.0;
};

/// A node of the transition network: an adjustable signal, the functions that
/// fit it within tolerance, and the best-fitting type used for coloring and
/// reduction (minimal delta, ties broken toward the lowest function index).
struct NetworkNode {
    std::uint64_t label = 0;
    std::vector<NodeFit> fits;  // ascending function index
    std::uint32_t best_type = 0;
};

struct NetworkParams {
    double tau_s = 0.0;
    double tau_d = 0.0;
    double alpha = 0.0;
    double link_threshold = 0.0;
    GridSpec grid;
    std::vector<std::string> function_names;
    std::string function_fingerprint;
};

/// Undirected edge as a pair of node indices, u < v.
struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    bool operator==(const Edge&) const = default;
};

struct TransitionNetwork {
    NetworkParams params;
    std::vector<NetworkNode> nodes;  // ascending label
    std::vector<Edge> edges;         // sorted by (u, v)

    /// Index of a label in nodes, or -1 when absent.
    std::ptrdiff_t index_of_label(std::uint64_t label) const;

    /// Neighbor lists per node index, each ascending.
    std::vector<std::vector<std::uint32_t>> adjacency() const;
};

/// sqrt(sum_k (f_k - h_k)^2). Throws std::invalid_argument on length mismatch.
double euclidean_distance(std::span<const double> f, std::span<const double> h);

/// Inclusive link predicate on the squared distance, with a small slack so that
/// distances that are exact level multiples survive decimal round-off.
inline bool within_link_threshold(double squared_distance, double threshold) {
    return squared_distance <= threshold * threshold + 1e-12;
}

/// How candidate node pairs are generated when linking.
///  - AllPairs: reference O(|nodes|^2) scan.
///  - Neighborhood: enumerate lattice perturbations reaching at most
///    floor(L/dy) levels per coordinate, pruned by the squared-distance budget;
///    equivalent to AllPairs (tested) and much faster on sparse node sets.
///  - Automatic picks Neighborhood when its enumeration bound is cheaper.
enum class PairStrategy { Automatic, AllPairs, Neighborhood };

/// Stage 3 of the construction: one node per adjustable signal (union over the
/// per-function sets), an edge for every pair at Euclidean distance <= L.
/// Deterministic for a fixed input regardless of threads or strategy.
TransitionNetwork build_network(const AdjustableSets& sets, const FitEngine& engine,
                                double link_threshold, unsigned threads = 1,
                                PairStrategy strategy = PairStrategy::Automatic);

/// Type-level aggregation: one node per reference function; every original edge
/// contributes weight 1 to the (best_type(u), best_type(v)) pair, self-pairs
/// included, so the total weight equals the original edge count.
struct ReducedNetwork {
    std::vector<std::string> type_names;
    std::vector<std::uint64_t> node_counts;           // original nodes per type
    std::vector<std::vector<std::uint64_t>> weights;  // symmetric, indexed [i][j]

    std::uint64_t weight(std::size_t i, std::size_t j) const { return weights[i][j]; }
    std::uint64_t total_weight() const;
};

ReducedNetwork reduce_network(const TransitionNetwork& net);

/// Connected components as sorted label lists, ordered by smallest label.
std::vector<std::vector<std::uint64_t>> connected_components(const TransitionNetwork& net);

}  // namespace signet
