#pragma once

#include <stdexcept>
#include <string>

namespace ontokit {

// Base class for all analysis errors raised by the library. Parse errors are
// reported as values (see parser.hpp), not as exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnknownConceptError : public Error {
public:
    explicit UnknownConceptError(const std::string& name)
        : Error("unknown concept: " + name), concept_name(name) {}
    std::string concept_name;
};

class CycleDetectedError : public Error {
public:
    explicit CycleDetectedError(const std::string& name)
        : Error("cycle reachable from concept: " + name), concept_name(name) {}
    std::string concept_name;
};

class ReservedRoleMisuseError : public Error {
public:
    ReservedRoleMisuseError(const std::string& role, int line)
        : Error("reserved role '" + role + "' used under a universal or cardinality restriction (line " +
                std::to_string(line) + ")"),
          role(role), line(line) {}
    std::string role;
    int line;
};

class DuplicateQuestionIdError : public Error {
public:
    explicit DuplicateQuestionIdError(const std::string& id)
        : Error("duplicate question id: " + id), id(id) {}
    std::string id;
};

class MalformedTaxonomyError : public Error {
public:
    explicit MalformedTaxonomyError(const std::string& what) : Error("malformed taxonomy: " + what) {}
};

class UncleanGraphError : public Error {
public:
    explicit UncleanGraphError(const std::string& what) : Error("graph failed consistency gate: " + what) {}
};

class UnsupportedElementError : public Error {
public:
    explicit UnsupportedElementError(const std::string& what) : Error("unsupported element: " + what) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace ontokit
