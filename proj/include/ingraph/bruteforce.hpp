#pragma once

#include <optional>
#include <vector>

#include "ingraph/errors.hpp"

namespace ingraph {

/// Options for the exhaustive automorphism search.
struct AutEnumOptions {
    /// Stop after this many automorphisms; the result is then flagged
    /// truncated and the count is a lower bound.
    std::optional<unsigned long long> limit;
    /// Keep the permutations themselves (count-only runs set this false).
    bool store = true;
    /// Optional extra vertex coloring every automorphism must respect;
    /// combined with the degree-based initial coloring.
    std::vector<int> initial_colors;
};

struct AutEnumResult {
    unsigned long long count = 0;
    bool truncated = false;
    std::vector<std::vector<int>> perms;
};

/// Enumerate every automorphism of a simple undirected graph given as
/// neighbor lists, by individualization-refinement backtracking with a
/// degree-based initial coloring. Deterministic emission order. Exact count
/// when no limit is set. UsageError if the adjacency is not simple and
/// symmetric.
AutEnumResult enumerate_automorphisms(const std::vector<std::vector<int>>& adjacency,
                                      const AutEnumOptions& opts = {});

} // namespace ingraph
