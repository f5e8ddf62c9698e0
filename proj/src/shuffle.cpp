#include "pdas/shuffle.hpp"

#include <map>

#include "pdas/membership.hpp"

namespace pdas {

namespace {

using Memo = std::map<std::pair<std::size_t, std::size_t>, std::set<Word>>;

const std::set<Word>& shuffle_from(const Word& w, std::size_t i, const Word& x, std::size_t j,
                                   Memo& memo) {
  const auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::set<Word> out;
  if (i == w.size() || j == x.size()) {
    Word rest(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    rest.insert(rest.end(), x.begin() + static_cast<std::ptrdiff_t>(j), x.end());
    out.insert(std::move(rest));
  } else {
    for (const Word& tail : shuffle_from(w, i + 1, x, j, memo)) {
      Word v{w[i]};
      v.insert(v.end(), tail.begin(), tail.end());
      out.insert(std::move(v));
    }
    for (const Word& tail : shuffle_from(w, i, x, j + 1, memo)) {
      Word v{x[j]};
      v.insert(v.end(), tail.begin(), tail.end());
      out.insert(std::move(v));
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::set<Word> shuffle_words(const Word& w, const Word& x) {
  Memo memo;
  return shuffle_from(w, 0, x, 0, memo);
}

ShuffleMembership shuffle_member2(std::span<const Symbol> w, const Pda& a, const Pda& b,
                                  const Budget& budget) {
  if (w.size() >= 8 * sizeof(unsigned long long) - 1)
    throw std::invalid_argument("shuffle_member2: word too long for exhaustive splitting");
  MembershipOracle in_a(a, budget), in_b(b, budget);
  bool inconclusive = false;
  const unsigned long long limit = 1ULL << w.size();
  for (unsigned long long mask = 0; mask < limit; ++mask) {
    Word u, v;
    for (std::size_t p = 0; p < w.size(); ++p) ((mask >> p) & 1ULL ? u : v).push_back(w[p]);
    const auto ka = in_a.query(u);
    if (ka == VerdictKind::Rejected) continue;
    const auto kb = in_b.query(v);
    if (kb == VerdictKind::Rejected) continue;
    if (ka == VerdictKind::Accepted && kb == VerdictKind::Accepted) {
      std::vector<bool> split(w.size());
      for (std::size_t p = 0; p < w.size(); ++p) split[p] = (mask >> p) & 1ULL;
      return {VerdictKind::Accepted, std::move(split)};
    }
    inconclusive = true;
  }
  return {inconclusive ? VerdictKind::BudgetExhausted : VerdictKind::Rejected, std::nullopt};
}

}  // namespace pdas
