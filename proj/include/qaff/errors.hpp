#pragma once
/*
 * Exception types shared across the engine.  Every throwing situation named
 * by the public contracts maps to one of these.
 */

#include <stdexcept>
#include <string>

namespace qaff {

// Evaluation of a rational function at a root of its denominator, or a
// division by the zero scalar.
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// A computation escaped the configured degree/exponent truncation window.
struct TruncationExceeded : std::runtime_error {
  explicit TruncationExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Structural data handed to a constructor fails its declared invariants.
struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

// Germ-map generator data fails one of the consistency identities.
struct InconsistentGermData : std::runtime_error {
  explicit InconsistentGermData(const std::string& what) : std::runtime_error(what) {}
};

// Element-expression parse failure; carries the byte offset and what was
// expected at that point.
struct SyntaxError : std::runtime_error {
  size_t offset;
  std::string expected;
  SyntaxError(size_t off, const std::string& expect, const std::string& what)
      : std::runtime_error(what), offset(off), expected(expect) {}
};

}  // namespace qaff
