#include "plan.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

using namespace std;

namespace topq {

PlanValidation validate_plan(const Task &task, const vector<int> &steps) {
    Plan plan;
    plan.steps = steps;
    plan.traversal.reserve(steps.size() + 1);
    plan.traversal.push_back(task.initial);
    for (size_t i = 0; i < steps.size(); ++i) {
        int action_id = steps[i];
        if (action_id < 0 || action_id >= task.num_actions()) {
            return PlanRejection{
                PlanRejection::Reason::InvalidActionId, static_cast<int>(i),
                "step " + to_string(i) + " uses unknown action id " +
                    to_string(action_id)};
        }
        const State &state = plan.traversal.back();
        if (!task.is_applicable(state, action_id)) {
            return PlanRejection{
                PlanRejection::Reason::InapplicableStep, static_cast<int>(i),
                "action '" + task.actions[action_id].name +
                    "' is inapplicable at step " + to_string(i)};
        }
        plan.traversal.push_back(task.successor(state, action_id));
        plan.cost += task.actions[action_id].cost;
    }
    if (!task.goal_satisfied(plan.traversal.back())) {
        return PlanRejection{
            PlanRejection::Reason::GoalUnsatisfied,
            static_cast<int>(steps.size()),
            "final state does not satisfy the goal"};
    }
    return plan;
}

bool is_loopless(const Plan &plan) {
    unordered_set<State, StateHash> seen;
    for (const State &state : plan.traversal) {
        if (!seen.insert(state).second)
            return false;
    }
    return true;
}

ActionMultiset ActionMultiset::of(const vector<int> &steps) {
    ActionMultiset result;
    for (int step : steps)
        ++result.counts_[step];
    return result;
}

int ActionMultiset::total() const {
    int sum = 0;
    for (const auto &[action, count] : counts_)
        sum += count;
    return sum;
}

bool ActionMultiset::subset_of(const ActionMultiset &other) const {
    for (const auto &[action, count] : counts_) {
        auto it = other.counts_.find(action);
        if (it == other.counts_.end() || it->second < count)
            return false;
    }
    return true;
}

bool ActionMultiset::strict_subset_of(const ActionMultiset &other) const {
    return subset_of(other) && counts_ != other.counts_;
}

string relation_name(DominanceRelation relation) {
    switch (relation) {
    case DominanceRelation::Empty:
        return "none";
    case DominanceRelation::Unordered:
        return "unordered";
    case DominanceRelation::MultisetSubset:
        return "subset";
    case DominanceRelation::Loopless:
        return "loopless";
    }
    throw logic_error("unknown relation");
}

static bool revisits_any_of(const Plan &pi_prime, const Plan &pi) {
    unordered_map<State, int, StateHash> visit_counts;
    for (const State &state : pi_prime.traversal)
        ++visit_counts[state];
    for (const State &state : pi.traversal) {
        auto it = visit_counts.find(state);
        if (it != visit_counts.end() && it->second > 1)
            return true;
    }
    return false;
}

bool dominates(DominanceRelation relation, const Plan &pi,
               const Plan &pi_prime) {
    switch (relation) {
    case DominanceRelation::Empty:
        return false;
    case DominanceRelation::Unordered:
        return ActionMultiset::of(pi.steps) ==
               ActionMultiset::of(pi_prime.steps);
    case DominanceRelation::MultisetSubset:
        return ActionMultiset::of(pi.steps)
            .strict_subset_of(ActionMultiset::of(pi_prime.steps));
    case DominanceRelation::Loopless:
        return is_loopless(pi) && revisits_any_of(pi_prime, pi);
    }
    throw logic_error("unknown relation");
}

namespace {
string trim(const string &text) {
    size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == string::npos)
        return "";
    size_t end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

// Parses "; cost = N (unit cost)" style lines; nullopt if not one.
optional<long long> parse_cost_comment(const string &line) {
    istringstream in(line);
    string semicolon, cost_word, equals;
    long long value;
    if (in >> semicolon >> cost_word >> equals >> value &&
        semicolon == ";" && cost_word == "cost" && equals == "=")
        return value;
    return nullopt;
}
}

PlanFileContent read_plan(const Task &task, istream &in) {
    unordered_map<string, int> ids_by_name;
    unordered_set<string> duplicated_names;
    for (int i = 0; i < task.num_actions(); ++i) {
        const string &name = task.actions[i].name;
        if (!ids_by_name.emplace(name, i).second)
            duplicated_names.insert(name);
    }
    if (!duplicated_names.empty()) {
        throw invalid_argument(
            "task has duplicate action names (e.g. '" +
            *duplicated_names.begin() +
            "'); name-based plan input is ambiguous");
    }

    PlanFileContent content;
    optional<long long> declared_cost;
    string line;
    while (getline(in, line)) {
        line = trim(line);
        if (line.empty())
            continue;
        if (line[0] == ';') {
            if (auto cost = parse_cost_comment(line))
                declared_cost = cost;
            continue;
        }
        string name = line;
        if (name.front() == '(') {
            if (name.back() != ')')
                throw invalid_argument("unbalanced parentheses in '" + line + "'");
            name = trim(name.substr(1, name.size() - 2));
        }
        auto it = ids_by_name.find(name);
        if (it == ids_by_name.end())
            throw invalid_argument("unknown action name '" + name + "'");
        content.steps.push_back(it->second);
    }

    if (declared_cost) {
        long long actual = 0;
        for (int step : content.steps)
            actual += task.actions[step].cost;
        if (actual != *declared_cost) {
            content.diagnostics.push_back(
                "declared cost " + to_string(*declared_cost) +
                " does not match computed cost " + to_string(actual));
        }
    }
    return content;
}

PlanFileContent load_plan_file(const Task &task, const string &path) {
    ifstream in(path);
    if (!in)
        throw runtime_error("cannot open '" + path + "'");
    return read_plan(task, in);
}

void write_plan(const Task &task, const Plan &plan, ostream &out) {
    for (int step : plan.steps)
        out << "(" << task.actions[step].name << ")\n";
    out << "; cost = " << plan.cost
        << (task.metric_declared ? " (general cost)" : " (unit cost)") << "\n";
}

}
