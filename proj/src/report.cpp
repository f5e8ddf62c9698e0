#include "pdas/report.hpp"

namespace pdas {

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::Disagree: return "disagree";
    case Agreement::Inconclusive: return "inconclusive";
  }
  return "?";
}

Agreement compare_verdicts(VerdictKind lhs, VerdictKind rhs) {
  if (lhs == VerdictKind::BudgetExhausted || rhs == VerdictKind::BudgetExhausted)
    return Agreement::Inconclusive;
  return lhs == rhs ? Agreement::Agree : Agreement::Disagree;
}

void ComparisonReport::add(Word word, VerdictKind lhs, VerdictKind rhs) {
  const auto status = compare_verdicts(lhs, rhs);
  switch (status) {
    case Agreement::Agree: ++agreements; break;
    case Agreement::Disagree: ++disagreements; break;
    case Agreement::Inconclusive: ++inconclusive; break;
  }
  rows.push_back({std::move(word), lhs, rhs, status});
}

std::vector<Word> all_words(const std::vector<Symbol>& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (Symbol a : alphabet) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace pdas
