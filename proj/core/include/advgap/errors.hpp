#ifndef ADVGAP_ERRORS_HPP
#define ADVGAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace advgap {

/// Malformed or invalid input (JSON syntax, schema, simplex violations, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A ball-intersection query landed inside the tolerance band and no exact
/// decision path applies. Callers treat this as fatal unless they install a
/// margin policy of their own.
class InconclusiveError : public std::runtime_error {
public:
    explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured search budget (branch-and-bound nodes, clique count,
/// fibration size) ran out before the computation finished.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace advgap

#endif
