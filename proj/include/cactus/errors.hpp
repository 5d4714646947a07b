#pragma once

#include <stdexcept>
#include <string>

namespace cactus {

// Base class for all contract violations raised by the public API.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error {
    explicit SelfLoopError(int v)
        : Error("self-loop on vertex " + std::to_string(v)) {}
};

struct OutOfRangeError : Error {
    OutOfRangeError(int v, int n)
        : Error("vertex " + std::to_string(v) + " out of range [0," +
                std::to_string(n) + ")") {}
};

struct EdgeNotInGraphError : Error {
    EdgeNotInGraphError(int u, int v)
        : Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                ") not in graph") {}
};

struct DisconnectedError : Error {
    DisconnectedError() : Error("graph is not connected") {}
};

struct NotAPathError : Error {
    NotAPathError() : Error("vertex sequence is not a path") {}
};

struct QuotientNotCactusError : Error {
    QuotientNotCactusError() : Error("witness quotient is not a cactus") {}
};

struct PremiseViolatedError : Error {
    explicit PremiseViolatedError(const std::string& what) : Error(what) {}
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

struct NoCoreError : Error {
    NoCoreError() : Error("no core exists") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace cactus
