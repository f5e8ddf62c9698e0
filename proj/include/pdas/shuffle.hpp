#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pdas/pda.hpp"

namespace pdas {

/// All interleavings of `w` and `x` that keep each word's own order.
std::set<Word> shuffle_words(const Word& w, const Word& x);

struct ShuffleMembership {
  VerdictKind kind = VerdictKind::Rejected;
  /// Per position of the word: true if it belongs to the first machine's part.
  std::optional<std::vector<bool>> split;

  bool member() const { return kind == VerdictKind::Accepted; }
};

/// Is `w` in L(a) ⧢ L(b)? Tries every bipartition of the positions with
/// memoized membership queries; `budget` applies to each query.
ShuffleMembership shuffle_member2(std::span<const Symbol> w, const Pda& a, const Pda& b,
                                  const Budget& budget = {});

}  // namespace pdas
