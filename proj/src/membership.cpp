#include "pdas/membership.hpp"

namespace pdas {

VerdictKind MembershipOracle::query(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  // A word leaving the input alphabet is simply not in the language.
  bool foreign = false;
  for (Symbol s : w) foreign = foreign || !pda_.has_input_symbol(s);
  const auto kind = foreign ? VerdictKind::Rejected : pda_accepts(pda_, w, budget_).kind;
  cache_.emplace(w, kind);
  return kind;
}

}  // namespace pdas
