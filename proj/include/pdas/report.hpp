#pragma once

// Word-by-word comparison of two deciders, used by the differential verifiers.

#include <cstddef>
#include <string_view>
#include <vector>

#include "pdas/symbol.hpp"
#include "pdas/verdict.hpp"

namespace pdas {

enum class Agreement { Agree, Disagree, Inconclusive };

std::string_view to_string(Agreement a);

/// Budget exhaustion on either side is inconclusive, never a disagreement.
Agreement compare_verdicts(VerdictKind lhs, VerdictKind rhs);

struct ComparisonRow {
  Word word;
  VerdictKind lhs;
  VerdictKind rhs;
  Agreement status;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t inconclusive = 0;

  void add(Word word, VerdictKind lhs, VerdictKind rhs);
  bool all_agree() const { return disagreements == 0 && inconclusive == 0; }
};

/// Every word over `alphabet` of length at most `max_len`, shortest first,
/// then in alphabet order.
std::vector<Word> all_words(const std::vector<Symbol>& alphabet, std::size_t max_len);

}  // namespace pdas
