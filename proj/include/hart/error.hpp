#pragma once

#include <stdexcept>
#include <string>

namespace hart {

// Bad arguments from the caller (CLI exit code 2).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation hit a cap or an unstable truncation (CLI exit code 3).
struct ComputeError : std::runtime_error {
  explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hart
