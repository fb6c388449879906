#pragma once

#include "plan.h"
#include "task.h"

#include <cstdint>
#include <optional>

namespace topq {

struct SearchLimits {
    std::int64_t max_expansions = 10'000'000;
};

struct SearchStats {
    std::int64_t expanded = 0;
    std::int64_t generated = 0;
    double seconds = 0.0;
};

struct SearchOutcome {
    enum class Status {
        OptimalFound,
        ProvedUnsolvable,
        BoundExceeded,
        // Expansion limit hit; the caller must treat the task as undecided.
        ResourceLimit,
    };

    Status status;
    std::optional<Plan> witness;
    std::optional<int> cost;
    std::optional<int> bound;
    SearchStats stats;
};

std::string search_status_name(SearchOutcome::Status status);

/*
  Uniform-cost search with full-state duplicate detection. Ties between
  equal-cost nodes break by insertion order, so results are deterministic.
  With an upper bound, returns BoundExceeded as soon as all open nodes
  exceed it.
*/
SearchOutcome optimal_search(
    const Task &task, std::optional<int> upper_bound = std::nullopt,
    const SearchLimits &limits = {});

struct EnumerationResult {
    std::vector<Plan> plans;
    bool complete = true;
    std::optional<int> bound_used;
    std::optional<int> length_cap;
    std::int64_t visited = 0;
};

/*
  Exhaustive depth-first enumeration of all plans with cost <= bound (and at
  most length_cap steps, when given). Requires positive action costs unless
  a length cap bounds the recursion. complete is false iff the length cap
  cut off a branch that still had cost budget.
*/
EnumerationResult enumerate_plans(
    const Task &task, int cost_bound,
    std::optional<int> length_cap = std::nullopt);

// All loopless plans, cost-filtered when a bound is given. Always complete.
EnumerationResult enumerate_loopless(
    const Task &task, std::optional<int> cost_bound = std::nullopt);

}
