#pragma once

#include <stdexcept>
#include <string>

namespace sudoku_chroma {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph file, coloring file, or family expression.
// `line` is 1-based; 0 means the input was not line-oriented.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

// Family parameter below the documented minimum (e.g. cycle:2).
class InvalidSpecError : public Error {
public:
    using Error::Error;
};

// A clue coloring that is rejected as input: color outside the palette,
// or two adjacent vertices sharing a color.  Distinct from "zero extensions".
class ImproperColoringError : public Error {
public:
    using Error::Error;
};

// Instance too large for exhaustive search, or the wall-clock budget ran out.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Operation defined only for a class of graphs the argument is not in
// (e.g. exhaustive search on a disconnected graph).
class UnsupportedGraphError : public Error {
public:
    using Error::Error;
};

// Precondition of a bound theorem not met by the given pair of graphs.
class HypothesisError : public Error {
public:
    using Error::Error;
};

}  // namespace sudoku_chroma
