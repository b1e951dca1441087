#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kgring {

// Error categories surfaced by the library. The CLI maps these onto
// process exit codes; see tools/kgring_main.cpp.
enum class Errc {
  invalid_parameter,
  invalid_group,
  unsupported_spec,
  parse_error,
  no_embedding,
  budget_exceeded,
  unsupported,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}

  Errc code() const { return code_; }

  // For budget_exceeded: the enumeration size that would have been needed,
  // saturated at UINT64_MAX when it does not fit.
  std::uint64_t required_budget = 0;

  // For parse_error: 1-based position of the offending token.
  int line = 0;
  int column = 0;

 private:
  Errc code_;
};

[[noreturn]] inline void throw_budget_exceeded(std::uint64_t required, std::uint64_t limit,
                                               const std::string& what) {
  Error e(Errc::budget_exceeded, what + ": requires " + std::to_string(required) +
                                     " enumeration steps, budget is " + std::to_string(limit));
  e.required_budget = required;
  throw e;
}

// q^e with saturation at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

}  // namespace kgring
