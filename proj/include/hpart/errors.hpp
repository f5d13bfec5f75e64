#pragma once

#include <stdexcept>
#include <string>

namespace hpart {

// Malformed external input: bad edge lists, unparsable files, unknown names.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (disconnected argument, x == y, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The degree-budget hypothesis of a partitioning run does not hold.
class HypothesisError : public std::runtime_error {
public:
    HypothesisError(const std::string& what, long long required, long long actual)
        : std::runtime_error(what), required_(required), actual_(actual) {}

    long long required() const { return required_; }
    long long actual() const { return actual_; }

private:
    long long required_;
    long long actual_;
};

// A height function failed one of the properties the engine relies on.
class HeightContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check of the engine failed.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Enumeration or search space larger than the configured cap.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hpart
