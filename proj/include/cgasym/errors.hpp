#pragma once

#include <stdexcept>
#include <string>

namespace cgasym {

// Invalid parameter or evaluation point (bad spin, parity violation,
// radicand negative beyond tolerance, ...).  The message names the
// offending field.
class domain_error : public std::domain_error {
  public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Quantum number outside the admissible list for the context.
class range_error : public std::out_of_range {
  public:
    explicit range_error(const std::string& what) : std::out_of_range(what) {}
};

// Inverse iteration failed to reach the target residual.
class convergence_error : public std::runtime_error {
  public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// F' has no sign change on the interior; the SHA is not applicable.
class no_bracket_error : public std::runtime_error {
  public:
    explicit no_bracket_error(const std::string& what) : std::runtime_error(what) {}
};

// Operands belong to different contexts or incompatible methods.
class mismatch_error : public std::invalid_argument {
  public:
    explicit mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration would exceed the configured level cap.
class size_error : public std::length_error {
  public:
    explicit size_error(const std::string& what) : std::length_error(what) {}
};

} // namespace cgasym
