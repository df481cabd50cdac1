#pragma once

#include <stdexcept>
#include <string>

namespace lchoose {

/// Raised for malformed text input (lambda strings, graph strings, JSON files).
class ParseError : public std::runtime_error {
 public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation is called outside its preconditions, or when a
/// value would break a type invariant.
class ContractError : public std::invalid_argument {
 public:
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace lchoose
