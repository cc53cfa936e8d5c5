#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// Cap on exhaustive enumerations: CANTOR_GAUGE_BUDGET when set, else 2^20.
inline std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("CANTOR_GAUGE_BUDGET"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("CANTOR_GAUGE_BUDGET is not a positive integer: ") + env);
  }
  return kDefaultBudget;
}

/// Throws BudgetError when an enumeration of 2^bits items would exceed `budget`.
inline void require_budget(int bits, std::uint64_t budget, const std::string& what) {
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget)
    throw BudgetError(what + " needs 2^" + std::to_string(bits) + " items; budget is " +
                      std::to_string(budget));
}

}  // namespace cantor
