#pragma once

#include <linkgraph/construction.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace linkgraph {

inline constexpr std::size_t default_minor_oracle_cap = 12;
inline constexpr std::size_t max_minor_oracle_cap = 20;

/// A model of `target` in a host graph: one connected branch set per target
/// vertex and, per target edge {i, j} with i < j, a host path from a vertex of
/// branch set i to a vertex of branch set j whose interior avoids every branch
/// set and every other connector.
struct MinorWitness {
    SimpleGraph target;
    std::vector<std::vector<std::uint32_t>> branch_sets;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> connectors;

    auto order() const -> std::size_t { return target.size(); }
};

struct MinorCheck {
    bool ok = false;
    std::string reason;
};

auto complete_target(std::size_t t) -> SimpleGraph;
auto verify_minor(const SimpleGraph & host, const MinorWitness & w) -> MinorCheck;
auto verify_minor(const LabeledGraph & host, const MinorWitness & w) -> MinorCheck;

struct HadwigerResult {
    std::size_t eta = 0;
    MinorWitness witness;
};

/// Largest complete minor, found by enumerating partitions of each component
/// into connected, pairwise adjacent parts. Throws OracleTooLarge above `cap`
/// vertices; `cap` itself may not exceed max_minor_oracle_cap.
auto exact_hadwiger(const SimpleGraph & g, std::size_t cap = default_minor_oracle_cap) -> HadwigerResult;
auto exact_hadwiger(const Multigraph & g, std::size_t cap = default_minor_oracle_cap) -> HadwigerResult;

/// A vertex set X of G; everything else follows from G.
struct CutInstance {
    std::vector<VertexIndex> x;
};

/// K_t in the l-link graph from a vertex set X of diameter below l whose
/// complement is connected, t being the number of edges leaving X. Throws
/// PreconditionViolated when those conditions fail or t < 2.
auto kt_minor_from_cut(const LabeledGraph & h, const CutInstance & cut) -> MinorWitness;
/// K_{t+1} under the same conditions plus a cycle in the complement; throws
/// NoCycleInY when the complement is a forest.
auto kt1_minor_with_cycle(const LabeledGraph & h, const CutInstance & cut) -> MinorWitness;

/// Lifts a minor of the hub into the l-link graph. Branch sets are vertex
/// sets of G, each connected in the hub and carrying an l-link of its own
/// induced hub subgraph (else BranchSetLacksLink).
auto lift_minor(const LabeledGraph & h, const std::vector<std::vector<VertexIndex>> & branch_sets,
        const SimpleGraph & target) -> MinorWitness;

/// K_d in K_{d-1,d-1}, host vertices numbered as in complete_bipartite(d - 1, d - 1).
auto zelinka_minor(std::size_t d) -> MinorWitness;

/// Moves a witness between link graphs of a graph and of a subgraph sharing
/// its ids. Throws UnknownVertex if a host vertex has no counterpart.
auto transport(const LabeledGraph & from, const LabeledGraph & to, const MinorWitness & w) -> MinorWitness;

/// Random minimum-degree contraction; returns the largest clique seen among
/// the contracted graphs as a complete minor.
auto contraction_search(const SimpleGraph & host, std::uint64_t seed, std::size_t rounds) -> MinorWitness;

struct HadwigerOptions {
    std::size_t oracle_cap = default_minor_oracle_cap;
    std::size_t limit = default_link_limit;
    std::size_t max_candidates = 200;
    /// Rounds of contraction_search; 0 disables that route.
    std::size_t search_rounds = 0;
    std::uint64_t seed = 1;
};

struct RouteOutcome {
    std::string route;
    std::size_t order = 0;
    std::string note;
};

struct HadwigerBound {
    std::size_t bound = 0;
    std::string route;
    MinorWitness witness;
    std::size_t degeneracy = 0;
    /// Exact Hadwiger number of G when within the oracle cap.
    std::optional<std::size_t> eta_g;
    std::vector<RouteOutcome> routes;
};

/// Best verified complete minor of the l-link graph over the degeneracy,
/// cycle, cut, hub and (optionally) contraction-search routes. Throws NoEdge
/// if the l-link graph has no edge.
auto hadwiger_lower_bound(const LabeledGraph & h, const HadwigerOptions & options = {}) -> HadwigerBound;

/// Which hypotheses of the desk-scale Hadwiger check hold for (G, l).
struct HadwigerCases {
    bool biconnected = false;
    bool even = false;
    bool degeneracy = false;
    bool degree = false;
    bool small_degree = false;

    auto any() const -> bool { return biconnected || even || degeneracy || degree || small_degree; }
};

auto hadwiger_cases(const Multigraph & g, std::size_t ell) -> HadwigerCases;

auto to_json(const LabeledGraph & h, const MinorWitness & w) -> nlohmann::json;

}
