#pragma once

#include <stdexcept>
#include <string>

namespace ribbon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed PD text. Carries the zero-based token index where parsing stopped.
struct ParseError : Error {
    ParseError(std::size_t token_index, const std::string& what)
        : Error("token " + std::to_string(token_index) + ": " + what),
          token(token_index) {}
    std::size_t token;
};

// Diagram violates an occurrence-count invariant (e.g. a label seen 3 times).
struct ValidationError : Error {
    using Error::Error;
};

// Diagram admits no orientation compatible with the crossing convention,
// or an operation's structural assumption fails on otherwise valid input.
struct StructuralError : Error {
    using Error::Error;
};

// Caller broke an operation's precondition.
struct ContractError : Error {
    using Error::Error;
};

// A record's cut set repeats an edge label; the cut is undefined, not fatal.
struct DegenerateCutError : Error {
    using Error::Error;
};

// Exact integer arithmetic left the 64-bit range.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace ribbon
