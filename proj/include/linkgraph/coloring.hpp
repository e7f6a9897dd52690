#pragma once

#include <linkgraph/construction.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace linkgraph {

inline constexpr std::size_t default_colour_oracle_cap = 64;

/// Colours are 1..t; index i is the colour of vertex i.
struct Coloring {
    std::vector<std::uint32_t> colour;
    std::size_t t = 0;

    /// Number of distinct colours actually present.
    auto used() const -> std::size_t;
};

/// Colours are 1..t; index i is the colour of edge i.
struct EdgeColoring {
    std::vector<std::uint32_t> colour;
    std::size_t t = 0;
};

/// Throws PartialColoring if the assignment does not cover every vertex or
/// uses a colour outside 1..t.
auto is_proper(const SimpleGraph & h, const Coloring & c) -> bool;
auto is_proper(const LabeledGraph & h, const Coloring & c) -> bool;
auto is_proper(const Multigraph & g, const EdgeColoring & c) -> bool;

/// The largest number of distinct colours on the neighbourhood of one vertex.
auto foreign_colours(const SimpleGraph & h, const Coloring & c) -> std::size_t;
/// Relabels colours to 1..k preserving their order, where k is the number used.
auto compact(const Coloring & c) -> Coloring;

struct ChromaticResult {
    std::size_t chi = 0;
    Coloring coloring;
};

/// DSATUR branch and bound with a maximum-clique lower bound. Throws
/// OracleTooLarge above `cap` vertices.
auto exact_chromatic(const SimpleGraph & h, std::size_t cap = default_colour_oracle_cap) -> ChromaticResult;
auto exact_chromatic(const LabeledGraph & h, std::size_t cap = default_colour_oracle_cap) -> ChromaticResult;
auto exact_chromatic(const Multigraph & g, std::size_t cap = default_colour_oracle_cap) -> ChromaticResult;
auto clique_number(const SimpleGraph & h) -> std::size_t;
/// DSATUR without backtracking.
auto greedy_coloring(const SimpleGraph & h) -> Coloring;

/// Two edges conflict when they share an end; parallel edges always do.
auto edge_conflict_graph(const Multigraph & g) -> SimpleGraph;

struct EdgeChromaticResult {
    std::size_t chi_prime = 0;
    EdgeColoring coloring;
};

auto exact_edge_chromatic(const Multigraph & g, std::size_t cap = default_colour_oracle_cap) -> EdgeChromaticResult;

/// floor(t r / (r + 1)) + 1, or 0 when t = 0.
auto recolouring_bound(std::size_t t, std::size_t r) -> std::size_t;

/// Processes the original colour classes from t down to 1, vertices in index
/// order, moving each vertex to the least colour absent from its
/// neighbourhood when that is smaller than its class. Throws
/// PreconditionViolated when the input is improper or some vertex sees more
/// than r colours.
auto reduce_coloring(const SimpleGraph & h, const Coloring & c, std::size_t r) -> Coloring;

/// Colours each l-link by the colour of its middle (l-2)-link under `c`,
/// then reduces with r = 2.
auto lift_coloring(const LabeledGraph & h, const LabeledGraph & lower, const Coloring & c) -> Coloring;
auto lift_coloring(const Multigraph & g, std::size_t ell, const Coloring & c,
        std::size_t limit = default_link_limit) -> Coloring;

struct RecursiveColoring {
    Coloring coloring;
    std::size_t colours = 0;
    /// False when a base colouring had to come from the greedy heuristic.
    bool exact_base = true;
    /// Colours used at ell, ell - 2, ... down to the base, in that order.
    std::vector<std::size_t> chain;
};

/// Proper colouring of the l-link graph obtained from an optimal colouring
/// of G (even l) or an optimal edge colouring (odd l) by repeated lifting.
/// Where the graph two levels down is small enough, lifting its exact
/// colouring is tried as well and the better result kept.
auto recursive_chromatic_bound(const Multigraph & g, std::size_t ell, std::size_t cap = default_colour_oracle_cap,
        std::size_t limit = default_link_limit) -> RecursiveColoring;

struct Theorem1Bounds {
    std::size_t ell = 0;
    std::size_t chi = 0;
    std::size_t chi_prime = 0;
    std::size_t max_degree = 0;
    bool chi_exact = true;
    bool chi_prime_exact = true;
    /// min{chi, floor((2/3)^(l/2) (chi - 3)) + 3}, even l.
    std::optional<std::int64_t> even;
    /// min{chi', floor((2/3)^((l-1)/2) (chi' - 3)) + 3}, odd l.
    std::optional<std::int64_t> odd;
    /// max_degree + 1, l != 1.
    std::optional<std::int64_t> degree;
    /// Exact chromatic number of the link graph two levels down, l >= 2.
    std::optional<std::int64_t> two_below;

    /// Minimum of the bounds present.
    auto best() const -> std::optional<std::int64_t>;
};

auto theorem1_bounds(const Multigraph & g, std::size_t ell, std::size_t cap = default_colour_oracle_cap,
        std::size_t limit = default_link_limit) -> Theorem1Bounds;

auto to_json(const LabeledGraph & h, const Coloring & c) -> nlohmann::json;

struct RecolouringInstance {
    SimpleGraph graph;
    Coloring coloring;
    std::size_t r = 0;
};

/// A random proper colouring in which every vertex sees at most r colours.
/// Odd seeds lay the colour classes along a path so that r = 2; even seeds
/// draw r and add random edges while the precondition allows.
auto random_recolouring_instance(std::uint64_t seed) -> RecolouringInstance;

}
