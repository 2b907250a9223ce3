#pragma once

#include "sumgraph/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sumgraph {

/// An explicit list of color classes; class k (0-based) is color c_{k+1}.
struct ColorCertificate
{
    std::vector<std::vector<Edge>> classes;

    friend auto operator==(const ColorCertificate &, const ColorCertificate &) -> bool = default;
};

/// Edge -> color index, colors numbered from 1.
class EdgeColoring
{
public:
    /// Throws ConsistencyError if the edge already has a color or the
    /// color index is not positive.
    auto assign(const Edge & edge, int color) -> void;

    auto color_of(const Edge & edge) const -> std::optional<int>;
    auto assignment() const -> const std::map<Edge, int> & { return _colors; }
    auto size() const -> std::size_t { return _colors.size(); }

    /// Largest color index used, 0 when empty.
    auto palette_size() const -> int { return _palette; }

    /// Classes for colors 1..palette_size(), edges lexicographic. A color
    /// index that is skipped gives an empty class.
    auto to_certificate() const -> ColorCertificate;

    static auto from_certificate(const ColorCertificate & cert) -> EdgeColoring;

    friend auto operator==(const EdgeColoring &, const EdgeColoring &) -> bool = default;

private:
    std::map<Edge, int> _colors;
    int _palette = 0;
};

struct VerificationReport
{
    bool covers_all_edges = true;
    bool pairwise_disjoint = true;
    bool proper_at_every_vertex = true;
    std::size_t palette_size = 0;
    std::vector<std::string> issues;

    auto valid() const -> bool { return covers_all_edges && pairwise_disjoint && proper_at_every_vertex; }
};

/// The explicit |r| + s coloring of G_{r,s} for s >= 2, r < 0, -r <= s:
///
///   (0, j)   -> c_j                 1 <= j <= s
///   (0, -i)  -> c_{i+s}             1 <= i <= |r|
///   (-i, j)  -> c_{i+j}             1 <= j <= s-1
///   (-i, s)  -> c_{2i+s}            i <= floor(|r|/2)
///   (-i, s)  -> c_{i-floor(|r|/2)}  i >  floor(|r|/2)
///   (i, j)   -> c_{i+j+|r|}         0 < i < j, i+j <= s
///   (-i, -j) -> c_{i+j+s}           0 < i < j, i+j <= |r|
///
/// Throws DomainError outside the parameter range, ConsistencyError if the
/// rules ever miss or double-color an edge.
auto theorem_coloring(Label r, Label s) -> EdgeColoring;

/// Color = rank of the edge's sum among the non-empty edge-sum classes.
auto edge_sum_coloring(const IntegralSumGraph & graph) -> EdgeColoring;

/// s classes for G_{0,s}: class k = {(a, k-a) : 0 <= a < k-a}.
auto certificate_g0s(Label s) -> ColorCertificate;

/// s+1 classes for G_{-1,s}, s >= 2.
auto certificate_g_minus1_s(Label s) -> ColorCertificate;

/// Stored 2s-class list for G_{-s,s}, 2 <= s <= 6, exactly as transcribed.
/// These are not repaired; run verify_proper before trusting one.
auto certificate_g_ss(Label s) -> ColorCertificate;

/// A transcribed certificate from the bundled data files.
struct StoredCertificate
{
    Label r;
    Label s;
    ColorCertificate certificate;
};

/// Names: "g_ss_2" .. "g_ss_6", "g_minus1_5_example".
auto stored_certificate(std::string_view name) -> StoredCertificate;

/// Throws ForeignEdgeError if the coloring names an edge absent from the graph.
auto verify_proper(const IntegralSumGraph & graph, const EdgeColoring & coloring) -> VerificationReport;
auto verify_proper(const IntegralSumGraph & graph, const ColorCertificate & certificate) -> VerificationReport;

inline constexpr std::size_t default_solver_budget = 40;

struct ChromaticIndex
{
    std::size_t value;
    std::size_t max_degree;
    /// Present when value == max_degree.
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes;
};

/// Exact chromatic index by deterministic backtracking over the edges in
/// canonical order, colors ascending: Delta on success, Delta + 1 when the
/// Delta-color search is exhausted. Throws ResourceError when the graph has
/// more than `edge_budget` edges.
auto exact_chromatic_index(const IntegralSumGraph & graph, std::size_t edge_budget = default_solver_budget)
    -> ChromaticIndex;

/// Same search engine with a caller-chosen palette and a node budget instead
/// of an edge guard. nullopt means no proper `colors`-coloring exists;
/// ResourceError means the budget ran out first.
auto search_coloring(const IntegralSumGraph & graph, std::size_t colors, std::uint64_t node_budget)
    -> std::optional<EdgeColoring>;

struct ChromaticBounds
{
    std::size_t lower;
    std::size_t upper;
    bool exact;
};

/// Delta <= chi' <= |classes|; exact when the certificate uses Delta classes.
/// Throws CertificateError if the certificate fails verification.
auto chi_via_certificate(const IntegralSumGraph & graph, const ColorCertificate & certificate) -> ChromaticBounds;

} // namespace sumgraph
