#pragma once

#include <stdexcept>
#include <string>

namespace wrtk {

// Thrown when user-supplied parameters violate a constructor contract.
// The message names the violated constraint, e.g. "gcd(a,b) != 1".
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the domain of a map (e.g. (k,l) not in P, m not in Q_sign).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a pole of a rational-trigonometric expression.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Analytic precondition violated (e.g. parity condition of the reciprocity formula).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An internal identity that must hold by construction failed; indicates a bug.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// Classification product too close to zero to decide a strict sign.
class DegenerateClassificationError : public std::runtime_error {
public:
    explicit DegenerateClassificationError(const std::string& what) : std::runtime_error(what) {}
};

// Unwritable output path and similar I/O failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wrtk
