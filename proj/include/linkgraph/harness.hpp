#pragma once

#include <linkgraph/coloring.hpp>
#include <linkgraph/minors.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace linkgraph {

/// The graph of the shunting figure: a 2-cycle v0 v1 (edges e0, e1) with
/// pendant edges f0 = u0 v0 and f1 = v1 u1.
auto figure_two_graph() -> Multigraph;

struct CorpusInstance {
    std::string name;
    Multigraph graph;
    std::size_t ell_min = 0;
    std::size_t ell_max = 5;
    /// Part sizes when the instance is K_{n,m}.
    std::optional<std::pair<std::size_t, std::size_t>> bipartite;
    std::optional<std::uint64_t> seed;
};

struct CorpusSpec {
    std::vector<CorpusInstance> instances;
    /// Link enumeration limit per construction; larger instances are skipped.
    std::size_t limit = 20'000;
    std::size_t colour_cap = default_colour_oracle_cap;
    std::size_t minor_cap = default_minor_oracle_cap;
    /// Rounds of contraction search added to the Hadwiger lower bound.
    std::size_t search_rounds = 40;
    std::uint64_t seed = 0x6c696e6b;
    /// Random instances for the recolouring suite.
    std::size_t recolouring_instances = 500;
};

auto default_corpus() -> CorpusSpec;
/// Seeds of the two random multigraphs in the default corpus.
inline constexpr std::uint64_t corpus_seeds[] = { 0x5eed0001, 0x5eed0002 };

struct CheckResult {
    bool ok = true;
    nlohmann::json values = nlohmann::json::object();
    std::string detail;
};

/// |E(h)| = |V(next)|; for r-regular G also the closed counts and the
/// 2(r-1)-regularity of h.
auto check_counting(const Multigraph & g, const LabeledGraph & h, const LabeledGraph & next) -> CheckResult;
/// Order and degree formulas for the link graphs of K_{n,m}.
auto check_bipartite_counts(std::size_t n, std::size_t m, const LabeledGraph & h) -> CheckResult;
/// Distinct endpoints, and endpoints equal to the two windows of each label.
auto check_loopless(const LabeledGraph & h) -> CheckResult;
/// Multiplicity at most 2, every doubled pair living on a 2-cycle of G, and one
/// doubled pair per 2-cycle.
auto check_multiplicity(const LabeledGraph & h) -> CheckResult;
/// Hub connected when G is, and the shunting criterion agreeing with a direct
/// search over h.
auto check_connectivity(const LabeledGraph & h, std::size_t limit) -> CheckResult;
/// Every pair of l-links of the hub shunts within the hub.
auto check_hub_shunting(const Multigraph & g, std::size_t ell, std::size_t limit, std::size_t max_links = 64)
    -> CheckResult;
auto check_partition(const LabeledGraph & h, const AlmostStandardPartition & p, const LabeledGraph & lower)
    -> CheckResult;
auto check_recolouring(const RecolouringInstance & instance, const Coloring & reduced) -> CheckResult;
/// Proper and within `bound` colours.
auto check_colouring(const LabeledGraph & h, const Coloring & c, std::int64_t bound) -> CheckResult;
/// Verified witness of order at least `required`.
auto check_minor(const LabeledGraph & h, const MinorWitness & w, std::size_t required) -> CheckResult;
/// Path graph against the simplified link graph: equal when `expect_equal`,
/// otherwise an induced subgraph.
auto check_path_graph(const LabeledGraph & p, const LabeledGraph & h, bool expect_equal) -> CheckResult;
auto check_digraph_iso(const LabeledDigraph & arcs, const LabeledDigraph & iterated) -> CheckResult;

struct ClaimRecord {
    std::string claim;
    std::string instance;
    std::optional<std::size_t> ell;
    /// "pass", "fail" or "skip".
    std::string status;
    nlohmann::json values = nlohmann::json::object();
    std::string detail;
    /// Edge list of the instance, present on failures.
    std::string reproduce;
    double seconds = 0;
};

struct Report {
    std::uint64_t seed = 0;
    std::vector<ClaimRecord> records;

    auto failures() const -> std::size_t;
    auto passed() const -> bool { return failures() == 0; }
};

/// Claim ids understood by verify_suite, in report order.
auto known_claims() -> const std::vector<std::string> &;

/// Runs the selected claims (all when empty) over the corpus. Records are
/// sorted by claim id, then instance, then l.
auto verify_suite(const CorpusSpec & corpus, const std::vector<std::string> & claims = {}) -> Report;

auto to_json(const Report & r, bool timing = true) -> nlohmann::json;

}
