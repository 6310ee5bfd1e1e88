#pragma once

#include <stdexcept>
#include <string>

namespace psl {

// Caller passed something outside an operation's contract.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public std::runtime_error {
public:
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

// A structural precondition (non-degeneracy, P1, P2, ...) failed; the
// message names the property.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// Certified-impossible state reached; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace psl
