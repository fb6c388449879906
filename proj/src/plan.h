#pragma once

#include "task.h"

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace topq {

/*
  A validated plan: the step sequence is applicable in the initial state,
  the final traversal state satisfies the goal, and cost is the sum of the
  step costs. Instances are only created by validate_plan.
*/
struct Plan {
    std::vector<int> steps;
    int cost = 0;
    std::vector<State> traversal;  // s_0 .. s_n
};

struct PlanRejection {
    enum class Reason {
        InvalidActionId,
        InapplicableStep,
        GoalUnsatisfied,
    };
    Reason reason;
    // First failing step; steps.size() for an unsatisfied goal.
    int step_index;
    std::string message;
};

using PlanValidation = std::variant<Plan, PlanRejection>;

PlanValidation validate_plan(const Task &task, const std::vector<int> &steps);

inline const Plan *plan_if(const PlanValidation &validation) {
    return std::get_if<Plan>(&validation);
}

// True iff s_0 .. s_n are pairwise distinct.
bool is_loopless(const Plan &plan);

class ActionMultiset {
    std::map<int, int> counts_;

public:
    ActionMultiset() = default;
    static ActionMultiset of(const std::vector<int> &steps);

    const std::map<int, int> &counts() const {
        return counts_;
    }
    int total() const;
    bool subset_of(const ActionMultiset &other) const;
    bool strict_subset_of(const ActionMultiset &other) const;

    friend bool operator==(
        const ActionMultiset &, const ActionMultiset &) = default;
};

enum class DominanceRelation {
    Empty,
    Unordered,
    MultisetSubset,
    Loopless,
};

std::string relation_name(DominanceRelation relation);

// The pairwise test (pi, pi_prime) in R. Both plans must stem from the same
// task.
bool dominates(
    DominanceRelation relation, const Plan &pi, const Plan &pi_prime);

/*
  Plan file format: one "(action name)" line per step; lines starting with
  ';' are comments. A trailing "; cost = N (unit cost|general cost)" line is
  cross-checked against the computed cost; a mismatch is a diagnostic.
*/
struct PlanFileContent {
    std::vector<int> steps;
    std::vector<std::string> diagnostics;
};

PlanFileContent read_plan(const Task &task, std::istream &in);
PlanFileContent load_plan_file(const Task &task, const std::string &path);
void write_plan(const Task &task, const Plan &plan, std::ostream &out);

}
