#pragma once

#include <stdexcept>
#include <string>

namespace reflgrp {

// Arithmetic layer
struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero in cyclotomic field") {}
};
struct NotRational : std::runtime_error {
  NotRational() : std::runtime_error("cyclotomic value has a nonzero non-constant part") {}
};

// Group layer
struct OrderExceeded : std::runtime_error {
  explicit OrderExceeded(int cap)
      : std::runtime_error("group closure exceeded max_order = " + std::to_string(cap) +
                           " (infinite or mis-specified group)"),
        cap(cap) {}
  int cap;
};
struct Singular : std::runtime_error {
  Singular() : std::runtime_error("matrix is not invertible") {}
};
struct NotSL : std::runtime_error {
  NotSL() : std::runtime_error("element or subgroup has determinant != 1") {}
};

// Raised when two supposedly equivalent computations disagree; always a bug.
struct InternalMismatch : std::logic_error {
  explicit InternalMismatch(const std::string& what) : std::logic_error("internal mismatch: " + what) {}
};

// Reflection analysis
struct NotReflectionGroup : std::runtime_error {
  NotReflectionGroup() : std::runtime_error("group is not generated by its pseudoreflections") {}
};
struct DegreeRecoveryFailed : std::runtime_error {
  explicit DegreeRecoveryFailed(const std::string& what)
      : std::runtime_error("invariant degree recovery failed: " + what) {}
};
struct BadParameter : std::runtime_error {
  explicit BadParameter(const std::string& what) : std::runtime_error("bad parameter: " + what) {}
};

// Toric
struct Degenerate : std::runtime_error {
  Degenerate() : std::runtime_error("cone rays are linearly dependent") {}
};
struct UnknownCase : std::runtime_error {
  explicit UnknownCase(const std::string& name) : std::runtime_error("unknown toric case: " + name) {}
};

// SOD calculus
struct UnknownFamily : std::runtime_error {
  explicit UnknownFamily(const std::string& name)
      : std::runtime_error("unrecognized or unsupported family: " + name) {}
};
struct BadCodim : std::runtime_error {
  explicit BadCodim(int c)
      : std::runtime_error("blowup codimension out of range: " + std::to_string(c)) {}
};

// Serialization
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

}  // namespace reflgrp
