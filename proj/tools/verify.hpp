#pragma once

#include "zetadyn/actions.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zetadyn::cli {

/// The D_inf action on T^2 from the worked example: a -> [[-2,3],[1,-2]], b -> [[7,-12],[4,-7]].
ActionModel builtin_dinf_torus();
/// The Z x Z/3 action on T^4 from the worked example.
ActionModel builtin_zx3_torus();

struct FixtureResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::optional<std::string> only;
    /// Fixture ids whose expected data is deliberately perturbed (harness use).
    std::set<std::string> corrupt;
};

std::vector<std::string> fixture_ids();
/// Throws Error for an unknown --only id.
std::vector<FixtureResult> run_reference_suite(const VerifyOptions& opts);

} // namespace zetadyn::cli
