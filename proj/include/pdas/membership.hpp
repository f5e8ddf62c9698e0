#pragma once

#include <unordered_map>

#include "pdas/pda.hpp"

namespace pdas {

/// Memoized pda_accepts for repeated queries against one machine. Words with
/// symbols outside the input alphabet are rejected rather than refused.
class MembershipOracle {
 public:
  MembershipOracle(const Pda& pda, Budget budget) : pda_(pda), budget_(budget) {}

  VerdictKind query(const Word& w);
  std::size_t cache_size() const { return cache_.size(); }

 private:
  struct WordHash {
    std::size_t operator()(const Word& w) const { return hash_symbols(w); }
  };

  const Pda& pda_;
  Budget budget_;
  std::unordered_map<Word, VerdictKind, WordHash> cache_;
};

}  // namespace pdas
