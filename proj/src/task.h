#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace topq {

struct FactPair {
    int var;
    int value;

    friend auto operator<=>(const FactPair &, const FactPair &) = default;
};

// Full assignment: one value index per variable.
struct State {
    std::vector<int> values;

    friend auto operator<=>(const State &, const State &) = default;
};

struct StateHash {
    std::size_t operator()(const State &state) const;
};

/*
  Partial variable assignment. At most one fact per variable; facts are kept
  sorted by variable id. The constructor rejects duplicate variables.
*/
class PartialAssignment {
    std::vector<FactPair> facts_;

public:
    PartialAssignment() = default;
    explicit PartialAssignment(std::vector<FactPair> facts);

    // nullopt if the two assignments disagree on a shared variable.
    static std::optional<PartialAssignment> merged(
        const PartialAssignment &left, const PartialAssignment &right);

    const std::vector<FactPair> &facts() const {
        return facts_;
    }
    bool empty() const {
        return facts_.empty();
    }
    std::size_t size() const {
        return facts_.size();
    }
    bool defines(int var) const;
    std::optional<int> value_of(int var) const;

    // p <= s: the state agrees with every fact of this assignment.
    bool consistent_with(const State &state) const;

    PartialAssignment restricted_to_vars_below(int var_count) const;

    friend bool operator==(
        const PartialAssignment &, const PartialAssignment &) = default;
};

struct Variable {
    std::string name;
    int domain_size = 0;
    std::vector<std::string> value_names;

    friend bool operator==(const Variable &, const Variable &) = default;
};

struct Action {
    std::string name;
    PartialAssignment precondition;
    PartialAssignment effect;
    int cost = 0;

    // Precondition restricted to the variables the action does not affect.
    PartialAssignment prevail() const;

    friend bool operator==(const Action &, const Action &) = default;
};

struct Task {
    std::vector<Variable> variables;
    std::vector<Action> actions;
    State initial;
    PartialAssignment goal;
    // False when the SAS metric section declared 0 (all costs read as 1).
    bool metric_declared = true;

    int num_variables() const {
        return static_cast<int>(variables.size());
    }
    int num_actions() const {
        return static_cast<int>(actions.size());
    }

    const Action &action(int action_id) const;

    bool is_applicable(const State &state, int action_id) const;
    State successor(const State &state, int action_id) const;
    bool goal_satisfied(const State &state) const {
        return goal.consistent_with(state);
    }

    friend bool operator==(const Task &, const Task &) = default;
};

// Empty iff all task invariants hold; otherwise one message per violation.
std::vector<std::string> validate_task(const Task &task);

}
