#pragma once

#include "sumgraph/edge_coloring.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sumgraph {

struct CheckResult
{
    std::string name;
    bool passed;
    std::string detail;
};

/// Every library invariant over its desk-scale parameter range. Checks run
/// on up to `threads` workers (0 = hardware concurrency); results come back
/// in a fixed order regardless.
auto run_invariant_suite(unsigned threads = 0) -> std::vector<CheckResult>;

/// How chi'(G_{-s,s}) = 2s was established for one s.
struct GssEvidence
{
    Label s;
    /// Verification of the stored transcription, recorded as-is.
    VerificationReport stored;
    /// "stored_certificate", "exact_solver" or "fresh_certificate".
    std::string method;
    std::size_t chromatic_index;
    bool established;
};

/// Prefers the stored transcription; if it fails verification, falls back
/// to the exact solver when the graph fits the default budget, otherwise to
/// a freshly searched 2s-class certificate.
auto gss_chromatic_index(Label s, std::uint64_t node_budget = 10'000'000) -> GssEvidence;

} // namespace sumgraph
