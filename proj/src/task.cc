#include "task.h"

#include <algorithm>
#include <stdexcept>

using namespace std;

namespace topq {

size_t StateHash::operator()(const State &state) const {
    // FNV-1a over the value vector.
    size_t hash = 14695981039346656037ULL;
    for (int value : state.values) {
        hash ^= static_cast<size_t>(value) + 0x9e3779b97f4a7c15ULL;
        hash *= 1099511628211ULL;
    }
    return hash;
}

PartialAssignment::PartialAssignment(vector<FactPair> facts)
    : facts_(move(facts)) {
    sort(facts_.begin(), facts_.end());
    for (size_t i = 1; i < facts_.size(); ++i) {
        if (facts_[i - 1].var == facts_[i].var) {
            throw invalid_argument(
                "partial assignment mentions variable " +
                to_string(facts_[i].var) + " twice");
        }
    }
}

optional<PartialAssignment> PartialAssignment::merged(
    const PartialAssignment &left, const PartialAssignment &right) {
    vector<FactPair> facts;
    facts.reserve(left.size() + right.size());
    size_t i = 0, j = 0;
    while (i < left.facts_.size() && j < right.facts_.size()) {
        const FactPair &a = left.facts_[i];
        const FactPair &b = right.facts_[j];
        if (a.var < b.var) {
            facts.push_back(a);
            ++i;
        } else if (b.var < a.var) {
            facts.push_back(b);
            ++j;
        } else {
            if (a.value != b.value)
                return nullopt;
            facts.push_back(a);
            ++i;
            ++j;
        }
    }
    facts.insert(facts.end(), left.facts_.begin() + i, left.facts_.end());
    facts.insert(facts.end(), right.facts_.begin() + j, right.facts_.end());
    PartialAssignment result;
    result.facts_ = move(facts);
    return result;
}

bool PartialAssignment::defines(int var) const {
    return value_of(var).has_value();
}

optional<int> PartialAssignment::value_of(int var) const {
    auto it = lower_bound(
        facts_.begin(), facts_.end(), var,
        [](const FactPair &fact, int v) { return fact.var < v; });
    if (it != facts_.end() && it->var == var)
        return it->value;
    return nullopt;
}

bool PartialAssignment::consistent_with(const State &state) const {
    for (const FactPair &fact : facts_) {
        if (state.values[fact.var] != fact.value)
            return false;
    }
    return true;
}

PartialAssignment PartialAssignment::restricted_to_vars_below(
    int var_count) const {
    PartialAssignment result;
    for (const FactPair &fact : facts_) {
        if (fact.var < var_count)
            result.facts_.push_back(fact);
    }
    return result;
}

PartialAssignment Action::prevail() const {
    vector<FactPair> facts;
    for (const FactPair &fact : precondition.facts()) {
        if (!effect.defines(fact.var))
            facts.push_back(fact);
    }
    return PartialAssignment(move(facts));
}

const Action &Task::action(int action_id) const {
    if (action_id < 0 || action_id >= num_actions()) {
        throw out_of_range(
            "action id " + to_string(action_id) + " out of range (task has " +
            to_string(num_actions()) + " actions)");
    }
    return actions[action_id];
}

bool Task::is_applicable(const State &state, int action_id) const {
    return action(action_id).precondition.consistent_with(state);
}

State Task::successor(const State &state, int action_id) const {
    const Action &op = action(action_id);
    if (!op.precondition.consistent_with(state)) {
        throw logic_error(
            "action '" + op.name + "' is not applicable in the given state");
    }
    State result = state;
    for (const FactPair &fact : op.effect.facts())
        result.values[fact.var] = fact.value;
    return result;
}

static void check_assignment(
    const Task &task, const PartialAssignment &assignment,
    const string &what, vector<string> &diagnostics) {
    for (const FactPair &fact : assignment.facts()) {
        if (fact.var < 0 || fact.var >= task.num_variables()) {
            diagnostics.push_back(
                what + " references unknown variable " + to_string(fact.var));
        } else if (
            fact.value < 0 ||
            fact.value >= task.variables[fact.var].domain_size) {
            diagnostics.push_back(
                what + " assigns out-of-domain value " + to_string(fact.value) +
                " to variable '" + task.variables[fact.var].name + "'");
        }
    }
}

vector<string> validate_task(const Task &task) {
    vector<string> diagnostics;
    for (int var = 0; var < task.num_variables(); ++var) {
        const Variable &variable = task.variables[var];
        if (variable.domain_size < 1) {
            diagnostics.push_back(
                "variable '" + variable.name + "' has domain size " +
                to_string(variable.domain_size));
        }
        if (static_cast<int>(variable.value_names.size()) !=
            variable.domain_size) {
            diagnostics.push_back(
                "variable '" + variable.name + "' has " +
                to_string(variable.value_names.size()) +
                " value names for domain size " +
                to_string(variable.domain_size));
        }
    }
    if (static_cast<int>(task.initial.values.size()) != task.num_variables()) {
        diagnostics.push_back(
            "initial state has " + to_string(task.initial.values.size()) +
            " values for " + to_string(task.num_variables()) + " variables");
    } else {
        for (int var = 0; var < task.num_variables(); ++var) {
            int value = task.initial.values[var];
            if (value < 0 || value >= task.variables[var].domain_size) {
                diagnostics.push_back(
                    "initial state value " + to_string(value) +
                    " out of domain for variable '" +
                    task.variables[var].name + "'");
            }
        }
    }
    check_assignment(task, task.goal, "goal", diagnostics);
    for (int i = 0; i < task.num_actions(); ++i) {
        const Action &op = task.actions[i];
        string what = "action '" + op.name + "'";
        check_assignment(task, op.precondition, what + " precondition",
                         diagnostics);
        check_assignment(task, op.effect, what + " effect", diagnostics);
        if (op.cost < 0)
            diagnostics.push_back(what + " has negative cost");
        if (!task.metric_declared && op.cost != 1) {
            diagnostics.push_back(
                what + " has cost " + to_string(op.cost) +
                " although the task declares no metric");
        }
    }
    return diagnostics;
}

}
