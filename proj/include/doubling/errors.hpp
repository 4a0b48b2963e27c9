#pragma once

#include <stdexcept>
#include <string>

namespace doubling {

// Malformed input text or files (edge lists, measure files, CLI specs).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed (non-convergence, solver breakdown,
// cross-check mismatch). Distinct from invalid input.
struct ComputeError : std::runtime_error {
  explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace doubling
