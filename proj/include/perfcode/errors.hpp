#pragma once

#include <stdexcept>
#include <string>

namespace perfcode {

// Malformed input text: cycle notation, group spec tokens, unknown suite names.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates a precondition: degree mismatch, element
// outside the group, non-normal subgroup passed to a normality-only check, ...
struct SemanticError : std::runtime_error {
  explicit SemanticError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound was exceeded (closure cap, subgroup-enumeration
// bound, oracle feasibility bound).
struct BoundError : std::runtime_error {
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace perfcode
