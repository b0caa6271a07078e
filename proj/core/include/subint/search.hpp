#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "subint/calculus.hpp"

namespace subint {

struct SearchConfig {
    /// Bound on nested ImpI applications along a branch.
    std::size_t max_depth = 3;
    /// Interpolants for ImpI; empty means the subformula closure of the goal.
    std::optional<Formulas> interpolant_pool;
    /// Cap on (antecedent, succedent) implication pairs tried per node.
    std::size_t pair_budget = std::numeric_limits<std::size_t>::max();
};

enum class FailureReason { Exhausted, DepthCapped };

std::string_view failure_name(FailureReason r);

struct SearchStats {
    std::size_t nodes = 0;
    std::size_t memo_hits = 0;
};

struct ProveResult {
    std::optional<Derivation> proof;
    FailureReason reason = FailureReason::Exhausted;
    /// ImpI was attempted, so the interpolant pool bounded the search.
    bool pool_limited = false;
    /// Some node hit the pair budget.
    bool budget_limited = false;
    SearchStats stats;

    bool proved() const noexcept { return proof.has_value(); }
};

/// Backward proof search for the cut-free systems.
ProveResult prove(SystemId system, const Sequent& goal, const SearchConfig& cfg = {});

/// Given a derivation of => A -> B, a derivation of A => B.
Derivation invert_implication(SystemId system, const Derivation& d);

}  // namespace subint
