#ifndef GOSS_ERRORS_HPP
#define GOSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace goss {

// Arithmetic between elements of different field instances.
class FieldMismatchError : public std::runtime_error {
public:
    explicit FieldMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

// A query ran past the certified digit range / series precision.
// `required` carries the precision that would have been needed (0 if unknown).
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& msg, long required = 0)
        : std::runtime_error(msg), required_precision(required) {}
    long required_precision;
};

// A resource budget (enumeration size, stabilization doublings) was exceeded.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// An invariant that the underlying theory guarantees failed on actual data.
// Either the input falsifies a theorem hypothesis or there is a bug; both are fatal.
class TheoremViolation : public std::runtime_error {
public:
    explicit TheoremViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace goss

#endif
