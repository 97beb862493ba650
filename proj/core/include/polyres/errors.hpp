#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace polyres {

/// Rejected input: malformed documents, out-of-range indices, violated
/// preconditions. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation refused up front because its predicted size exceeds the
/// configured budget. Carries the blocking grading vector (empty when the
/// refusal is not tied to one). The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::vector<int> blocking_kvec,
                unsigned long long estimate, unsigned long long cap)
        : std::runtime_error(what),
          kvec(std::move(blocking_kvec)),
          estimate(estimate),
          cap(cap) {}

    std::vector<int> kvec;
    unsigned long long estimate;
    unsigned long long cap;
};

} // namespace polyres
