#pragma once

#include <stdexcept>
#include <string>

namespace kgfrac {

enum class ErrorKind {
    domain,              // argument outside the mathematical domain
    structural,          // mismatched jets/sequences, index out of range
    insufficient_order,  // jet order too low for a derivative
    config,              // malformed or invalid run configuration
    numerical,           // step failure, non-convergence
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace kgfrac
