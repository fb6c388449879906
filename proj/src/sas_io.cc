#include "sas_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

using namespace std;

namespace topq {

namespace {
const int kSupportedVersion = 3;

class Reader {
    istream &in;
    int line_no = 0;

public:
    explicit Reader(istream &in) : in(in) {
    }

    int line() const {
        return line_no;
    }

    [[noreturn]] void error(const string &message) const {
        throw ParseError(message, line_no);
    }

    bool try_read_line(string &line) {
        while (getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            return true;
        }
        return false;
    }

    string read_line(const string &what) {
        string line;
        if (!try_read_line(line))
            error("unexpected end of input while reading " + what);
        return line;
    }

    void expect(const string &magic) {
        string line = read_line("'" + magic + "'");
        if (line != magic)
            error("expected '" + magic + "', got '" + line + "'");
    }

    int read_int(const string &what) {
        return parse_int(read_line(what), what);
    }

    int parse_int(const string &token, const string &what) {
        size_t consumed = 0;
        int value = 0;
        try {
            value = stoi(token, &consumed);
        } catch (const exception &) {
            error("expected integer for " + what + ", got '" + token + "'");
        }
        if (consumed != token.size())
            error("trailing characters after integer in '" + token + "'");
        return value;
    }

    vector<int> read_ints(const string &what, int count) {
        istringstream row(read_line(what));
        vector<int> values(count);
        for (int &value : values) {
            if (!(row >> value))
                error("expected " + to_string(count) + " integers for " + what);
        }
        string rest;
        if (row >> rest)
            error("trailing characters after " + what);
        return values;
    }
};

void check_fact(
    const Reader &reader, const vector<Variable> &variables, int var,
    int value, const string &what) {
    if (var < 0 || var >= static_cast<int>(variables.size()))
        reader.error(what + ": unknown variable " + to_string(var));
    if (value < 0 || value >= variables[var].domain_size)
        reader.error(
            what + ": value " + to_string(value) +
            " out of domain for variable '" + variables[var].name + "'");
}

Variable read_variable(Reader &reader) {
    reader.expect("begin_variable");
    Variable variable;
    variable.name = reader.read_line("variable name");
    int axiom_layer = reader.read_int("axiom layer");
    if (axiom_layer != -1)
        throw UnsupportedFeatureError(
            "variable '" + variable.name +
            "' is derived (axiom layer " + to_string(axiom_layer) +
            "); axioms are not supported");
    variable.domain_size = reader.read_int("domain size");
    if (variable.domain_size < 1)
        reader.error("domain size must be positive");
    variable.value_names.reserve(variable.domain_size);
    for (int i = 0; i < variable.domain_size; ++i)
        variable.value_names.push_back(reader.read_line("value name"));
    reader.expect("end_variable");
    return variable;
}

void skip_mutex_group(Reader &reader, const vector<Variable> &variables) {
    reader.expect("begin_mutex_group");
    int num_facts = reader.read_int("mutex group size");
    for (int i = 0; i < num_facts; ++i) {
        vector<int> fact = reader.read_ints("mutex fact", 2);
        check_fact(reader, variables, fact[0], fact[1], "mutex group");
    }
    reader.expect("end_mutex_group");
}

Action read_operator(
    Reader &reader, const vector<Variable> &variables, bool use_metric) {
    reader.expect("begin_operator");
    Action op;
    op.name = reader.read_line("operator name");
    vector<FactPair> precondition;
    vector<FactPair> effect;

    int num_prevail = reader.read_int("prevail count");
    for (int i = 0; i < num_prevail; ++i) {
        vector<int> fact = reader.read_ints("prevail condition", 2);
        check_fact(reader, variables, fact[0], fact[1], "prevail condition");
        precondition.push_back({fact[0], fact[1]});
    }

    int num_effects = reader.read_int("effect count");
    if (num_effects < 0)
        reader.error("negative effect count");
    for (int i = 0; i < num_effects; ++i) {
        string line = reader.read_line("effect");
        istringstream row(line);
        int num_conditions;
        if (!(row >> num_conditions))
            reader.error("malformed effect line '" + line + "'");
        if (num_conditions != 0)
            throw UnsupportedFeatureError(
                "operator '" + op.name +
                "' has a conditional effect; conditional effects are not "
                "supported");
        int var, pre, post;
        if (!(row >> var >> pre >> post))
            reader.error("malformed effect line '" + line + "'");
        if (pre != -1) {
            check_fact(reader, variables, var, pre, "effect precondition");
            precondition.push_back({var, pre});
        }
        check_fact(reader, variables, var, post, "effect");
        effect.push_back({var, post});
    }

    int cost = reader.read_int("operator cost");
    if (cost < 0)
        reader.error("operator cost must be non-negative");
    op.cost = use_metric ? cost : 1;
    reader.expect("end_operator");

    try {
        op.precondition = PartialAssignment(move(precondition));
        op.effect = PartialAssignment(move(effect));
    } catch (const invalid_argument &e) {
        reader.error("operator '" + op.name + "': " + e.what());
    }
    return op;
}
}

Task parse_sas(istream &in) {
    Reader reader(in);

    reader.expect("begin_version");
    int version = reader.read_int("version");
    if (version != kSupportedVersion)
        reader.error(
            "unsupported translator format version " + to_string(version));
    reader.expect("end_version");

    reader.expect("begin_metric");
    int metric = reader.read_int("metric");
    if (metric != 0 && metric != 1)
        reader.error("metric must be 0 or 1");
    reader.expect("end_metric");

    Task task;
    task.metric_declared = metric == 1;

    int num_variables = reader.read_int("variable count");
    if (num_variables < 1)
        reader.error("task needs at least one variable");
    task.variables.reserve(num_variables);
    for (int i = 0; i < num_variables; ++i)
        task.variables.push_back(read_variable(reader));

    int num_mutexes = reader.read_int("mutex group count");
    for (int i = 0; i < num_mutexes; ++i)
        skip_mutex_group(reader, task.variables);

    reader.expect("begin_state");
    task.initial.values.reserve(num_variables);
    for (int var = 0; var < num_variables; ++var) {
        int value = reader.read_int("initial state value");
        check_fact(reader, task.variables, var, value, "initial state");
        task.initial.values.push_back(value);
    }
    reader.expect("end_state");

    reader.expect("begin_goal");
    int num_goals = reader.read_int("goal count");
    vector<FactPair> goal_facts;
    for (int i = 0; i < num_goals; ++i) {
        vector<int> fact = reader.read_ints("goal fact", 2);
        check_fact(reader, task.variables, fact[0], fact[1], "goal");
        goal_facts.push_back({fact[0], fact[1]});
    }
    try {
        task.goal = PartialAssignment(move(goal_facts));
    } catch (const invalid_argument &e) {
        reader.error(string("goal: ") + e.what());
    }
    reader.expect("end_goal");

    int num_operators = reader.read_int("operator count");
    if (num_operators < 0)
        reader.error("negative operator count");
    task.actions.reserve(num_operators);
    for (int i = 0; i < num_operators; ++i)
        task.actions.push_back(
            read_operator(reader, task.variables, task.metric_declared));

    int num_axioms = reader.read_int("axiom count");
    if (num_axioms != 0)
        throw UnsupportedFeatureError(
            "task declares " + to_string(num_axioms) +
            " axioms; axioms are not supported");

    string rest;
    while (reader.try_read_line(rest)) {
        if (!rest.empty())
            reader.error("trailing content '" + rest + "'");
    }
    return task;
}

Task load_sas_file(const string &path) {
    ifstream in(path);
    if (!in)
        throw runtime_error("cannot open '" + path + "'");
    return parse_sas(in);
}

void serialize_sas(const Task &task, ostream &out) {
    out << "begin_version\n" << kSupportedVersion << "\nend_version\n";
    out << "begin_metric\n" << (task.metric_declared ? 1 : 0)
        << "\nend_metric\n";

    out << task.num_variables() << "\n";
    for (const Variable &variable : task.variables) {
        out << "begin_variable\n" << variable.name << "\n-1\n"
            << variable.domain_size << "\n";
        for (const string &value_name : variable.value_names)
            out << value_name << "\n";
        out << "end_variable\n";
    }

    out << 0 << "\n";  // mutex groups

    out << "begin_state\n";
    for (int value : task.initial.values)
        out << value << "\n";
    out << "end_state\n";

    out << "begin_goal\n" << task.goal.size() << "\n";
    for (const FactPair &fact : task.goal.facts())
        out << fact.var << " " << fact.value << "\n";
    out << "end_goal\n";

    out << task.num_actions() << "\n";
    for (const Action &op : task.actions) {
        out << "begin_operator\n" << op.name << "\n";
        PartialAssignment prevail = op.prevail();
        out << prevail.size() << "\n";
        for (const FactPair &fact : prevail.facts())
            out << fact.var << " " << fact.value << "\n";
        out << op.effect.size() << "\n";
        for (const FactPair &fact : op.effect.facts()) {
            optional<int> pre = op.precondition.value_of(fact.var);
            out << "0 " << fact.var << " " << pre.value_or(-1) << " "
                << fact.value << "\n";
        }
        out << op.cost << "\nend_operator\n";
    }

    out << 0 << "\n";  // axioms
}

string serialize_sas(const Task &task) {
    ostringstream out;
    serialize_sas(task, out);
    return out.str();
}

}
