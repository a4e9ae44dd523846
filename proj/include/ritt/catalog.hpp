#pragma once

// Exact fixtures for the published identities: factor chains as printed,
// closed forms as printed, and replayable Moebius reduction steps.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ritt/algebra.hpp"
#include "ritt/report.hpp"

namespace ritt {

/// One arrow of a reduction chain: post means map o current, pre means
/// current o map.
struct ReplayStep {
    enum class Side { Post, Pre };
    Side side;
    RatFunc map;
    RatFunc printed;  // the intermediate as printed after this arrow
};

struct FixtureRecord {
    std::string name;
    std::optional<RatFunc> closed_form;           // as printed
    std::vector<std::vector<RatFunc>> chains;     // outermost factor first
    std::vector<std::size_t> expected_lengths;
    std::optional<int> expected_degree;
    std::string provenance;
    std::optional<RatFunc> start;                 // reduction chains only
    std::vector<ReplayStep> steps;
};

/// Names: bergweiler, s4, chebyshev(p) for p >= 2, moebius-chain-1,
/// moebius-chain-2. Throws UnknownFixture.
FixtureRecord fixture(const std::string& name);

/// Every fixture name with chebyshev instantiated at 2, 3, 5, 7.
std::vector<std::string> fixture_names();

struct FixtureReport {
    std::string name;
    std::vector<Check> checks;
    /// Common value of all chains when they agree.
    std::optional<RatFunc> value;

    /// All non-informational checks pass.
    bool verified() const;
};

FixtureReport verify_fixture(const std::string& name);

}  // namespace ritt
