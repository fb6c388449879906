#pragma once

#include "task.h"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace topq {

class ParseError : public std::runtime_error {
    int line_;

public:
    ParseError(const std::string &message, int line)
        : std::runtime_error("[line " + std::to_string(line) + "] " + message),
          line_(line) {
    }
    int line() const {
        return line_;
    }
};

class UnsupportedFeatureError : public std::runtime_error {
public:
    explicit UnsupportedFeatureError(const std::string &message)
        : std::runtime_error(message) {
    }
};

// Reads translator output format version 3. Mutex groups are parsed and
// discarded; axioms and conditional effects are rejected.
Task parse_sas(std::istream &in);
Task load_sas_file(const std::string &path);

void serialize_sas(const Task &task, std::ostream &out);
std::string serialize_sas(const Task &task);

}
