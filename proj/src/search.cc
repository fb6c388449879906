#include "search.h"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

using namespace std;

namespace topq {

string search_status_name(SearchOutcome::Status status) {
    switch (status) {
    case SearchOutcome::Status::OptimalFound:
        return "optimal-found";
    case SearchOutcome::Status::ProvedUnsolvable:
        return "unsolvable";
    case SearchOutcome::Status::BoundExceeded:
        return "bound-exceeded";
    case SearchOutcome::Status::ResourceLimit:
        return "resource-limit";
    }
    throw logic_error("unknown search status");
}

namespace {
struct Node {
    int state_id;
    int parent;  // node index, -1 for the root
    int action_id;
};

struct OpenEntry {
    int g;
    std::int64_t order;
    int node;

    bool operator>(const OpenEntry &other) const {
        return g > other.g || (g == other.g && order > other.order);
    }
};
}

SearchOutcome optimal_search(
    const Task &task, optional<int> upper_bound, const SearchLimits &limits) {
    auto start_time = chrono::steady_clock::now();
    SearchOutcome outcome;
    auto finish = [&](SearchOutcome::Status status) -> SearchOutcome & {
        outcome.status = status;
        outcome.stats.seconds =
            chrono::duration<double>(chrono::steady_clock::now() - start_time)
                .count();
        return outcome;
    };

    vector<State> states;
    unordered_map<State, int, StateHash> state_ids;
    auto state_id_of = [&](const State &state) {
        auto [it, inserted] =
            state_ids.emplace(state, static_cast<int>(states.size()));
        if (inserted)
            states.push_back(state);
        return it->second;
    };

    vector<Node> nodes;
    vector<int> best_g;
    vector<char> expanded;
    priority_queue<OpenEntry, vector<OpenEntry>, greater<OpenEntry>> open;
    std::int64_t order = 0;

    int initial_id = state_id_of(task.initial);
    best_g.push_back(0);
    expanded.push_back(false);
    nodes.push_back({initial_id, -1, -1});
    open.push({0, order++, 0});

    while (!open.empty()) {
        OpenEntry entry = open.top();
        open.pop();
        const Node &node = nodes[entry.node];
        if (expanded[node.state_id] || entry.g > best_g[node.state_id])
            continue;
        if (upper_bound && entry.g > *upper_bound) {
            outcome.bound = *upper_bound;
            return finish(SearchOutcome::Status::BoundExceeded);
        }
        expanded[node.state_id] = true;
        if (++outcome.stats.expanded > limits.max_expansions)
            return finish(SearchOutcome::Status::ResourceLimit);

        const State &state = states[node.state_id];
        if (task.goal_satisfied(state)) {
            vector<int> steps;
            for (int idx = entry.node; nodes[idx].parent != -1;
                 idx = nodes[idx].parent)
                steps.push_back(nodes[idx].action_id);
            reverse(steps.begin(), steps.end());
            PlanValidation validation = validate_plan(task, steps);
            const Plan *plan = plan_if(validation);
            assert(plan && plan->cost == entry.g);
            outcome.witness = *plan;
            outcome.cost = entry.g;
            return finish(SearchOutcome::Status::OptimalFound);
        }

        for (int action_id = 0; action_id < task.num_actions(); ++action_id) {
            if (!task.is_applicable(state, action_id))
                continue;
            State succ = task.successor(state, action_id);
            int succ_g = entry.g + task.actions[action_id].cost;
            int succ_id = state_id_of(succ);
            if (succ_id == static_cast<int>(best_g.size())) {
                best_g.push_back(succ_g);
                expanded.push_back(false);
            } else if (expanded[succ_id] || succ_g >= best_g[succ_id]) {
                continue;
            } else {
                best_g[succ_id] = succ_g;
            }
            ++outcome.stats.generated;
            nodes.push_back({succ_id, entry.node, action_id});
            open.push({succ_g, order++, static_cast<int>(nodes.size()) - 1});
        }
    }
    return finish(SearchOutcome::Status::ProvedUnsolvable);
}

namespace {
class Enumerator {
    const Task &task;
    const int cost_bound;
    const optional<int> length_cap;
    EnumerationResult result;
    vector<int> steps;

    void visit(const State &state, int cost) {
        ++result.visited;
        if (task.goal_satisfied(state)) {
            PlanValidation validation = validate_plan(task, steps);
            const Plan *plan = plan_if(validation);
            assert(plan);
            result.plans.push_back(*plan);
        }
        for (int action_id = 0; action_id < task.num_actions(); ++action_id) {
            if (!task.is_applicable(state, action_id))
                continue;
            int succ_cost = cost + task.actions[action_id].cost;
            if (succ_cost > cost_bound)
                continue;
            if (length_cap &&
                static_cast<int>(steps.size()) >= *length_cap) {
                result.complete = false;
                continue;
            }
            steps.push_back(action_id);
            visit(task.successor(state, action_id), succ_cost);
            steps.pop_back();
        }
    }

public:
    Enumerator(const Task &task, int cost_bound, optional<int> length_cap)
        : task(task), cost_bound(cost_bound), length_cap(length_cap) {
        result.bound_used = cost_bound;
        result.length_cap = length_cap;
    }

    EnumerationResult run() {
        visit(task.initial, 0);
        return move(result);
    }
};
}

EnumerationResult enumerate_plans(
    const Task &task, int cost_bound, optional<int> length_cap) {
    if (!length_cap) {
        for (const Action &op : task.actions) {
            if (op.cost == 0)
                throw invalid_argument(
                    "task has zero-cost action '" + op.name +
                    "'; bounded enumeration needs a length cap");
        }
    }
    return Enumerator(task, cost_bound, length_cap).run();
}

namespace {
class LooplessEnumerator {
    const Task &task;
    const optional<int> cost_bound;
    EnumerationResult result;
    vector<int> steps;
    unordered_set<State, StateHash> on_path;

    void visit(const State &state, int cost) {
        ++result.visited;
        if (task.goal_satisfied(state) && (!cost_bound || cost <= *cost_bound)) {
            PlanValidation validation = validate_plan(task, steps);
            const Plan *plan = plan_if(validation);
            assert(plan);
            result.plans.push_back(*plan);
        }
        for (int action_id = 0; action_id < task.num_actions(); ++action_id) {
            if (!task.is_applicable(state, action_id))
                continue;
            int succ_cost = cost + task.actions[action_id].cost;
            if (cost_bound && succ_cost > *cost_bound)
                continue;
            State succ = task.successor(state, action_id);
            if (on_path.count(succ))
                continue;
            on_path.insert(succ);
            steps.push_back(action_id);
            visit(succ, succ_cost);
            steps.pop_back();
            on_path.erase(succ);
        }
    }

public:
    LooplessEnumerator(const Task &task, optional<int> cost_bound)
        : task(task), cost_bound(cost_bound) {
        result.bound_used = cost_bound;
    }

    EnumerationResult run() {
        on_path.insert(task.initial);
        visit(task.initial, 0);
        return move(result);
    }
};
}

EnumerationResult enumerate_loopless(
    const Task &task, optional<int> cost_bound) {
    return LooplessEnumerator(task, cost_bound).run();
}

}
