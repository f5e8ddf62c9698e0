#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdas {

enum class VerdictKind { Accepted, Rejected, BudgetExhausted };

std::string_view to_string(VerdictKind k);

/// Limits for a configuration-space search. `max_steps` bounds the length of
/// explored step sequences, `max_configurations` the number of distinct
/// configurations discovered.
struct Budget {
  std::size_t max_configurations = 100000;
  std::size_t max_steps = 100000;

  Budget() = default;
  Budget(std::size_t configs, std::size_t steps) : max_configurations(configs), max_steps(steps) {
    if (configs == 0 || steps == 0) throw std::invalid_argument("budget limits must be positive");
  }
};

struct SearchStats {
  std::size_t configurations = 0;  // distinct configurations discovered
  std::size_t expansions = 0;      // configurations whose successors were computed
  std::size_t depth = 0;           // deepest step count reached
};

/// Three-valued search outcome. Rejected is only reported when the reachable
/// configuration space was exhausted within the budget.
template <class Step>
struct Verdict {
  VerdictKind kind = VerdictKind::Rejected;
  std::optional<std::vector<Step>> witness;  // present iff Accepted
  SearchStats stats;

  bool accepted() const { return kind == VerdictKind::Accepted; }
  bool rejected() const { return kind == VerdictKind::Rejected; }
  bool exhausted() const { return kind == VerdictKind::BudgetExhausted; }
};

/// Raised for words that are not over the machine's input alphabet, and
/// similar caller errors detected before any search starts.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pdas
