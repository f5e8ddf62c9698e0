#include "pdas/dpas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pdas/membership.hpp"
#include "pdas/search.hpp"

namespace pdas {

DpasSystem::DpasSystem(std::vector<Pda> components, AcceptanceMode mode)
    : components_(std::move(components)), mode_(mode) {
  if (components_.empty()) throw std::invalid_argument("a DPAS needs at least one component");
  auto sorted_inputs = [](const Pda& p) {
    auto v = p.input_alphabet();
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto sigma = sorted_inputs(components_.front());
  for (const auto& c : components_)
    if (sorted_inputs(c) != sigma)
      throw std::invalid_argument("DPAS components must share one input alphabet");
  uniform_ = std::all_of(components_.begin(), components_.end(),
                         [&](const Pda& c) { return c == components_.front(); });
}

DpasSystem DpasSystem::uniform(const Pda& component, std::size_t copies, AcceptanceMode mode) {
  if (copies == 0) throw std::invalid_argument("number of copies must be at least 1");
  return DpasSystem(std::vector<Pda>(copies, component), mode);
}

std::vector<DpasConfiguration> initial_configurations(const DpasSystem& sys) {
  DpasConfiguration base;
  for (const Pda& c : sys.components())
    base.parts.push_back(DpasPart{c.initial_state(), Stack{c.bottom_symbol()}});
  std::vector<DpasConfiguration> out;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    base.active = i;
    out.push_back(base);
  }
  return out;
}

namespace {

std::vector<std::size_t> moves_of(const DpasSystem& sys, const DpasConfiguration& cfg,
                                  std::size_t i, std::span<const Symbol> word) {
  const auto& part = cfg.parts[i];
  return applicable_moves(sys.component(i), PdaConfig{part.state, cfg.input_pos, part.stack},
                          word);
}

}  // namespace

std::vector<DpasTransition> dpas_step(const DpasSystem& sys, const DpasConfiguration& cfg,
                                      std::span<const Symbol> word) {
  std::vector<DpasTransition> out;
  const std::size_t a = cfg.active;
  const auto own = moves_of(sys, cfg, a, word);
  if (!own.empty()) {
    const auto& part = cfg.parts[a];
    const PdaConfig local{part.state, cfg.input_pos, part.stack};
    for (std::size_t m : own) {
      PdaConfig moved = apply_move(local, sys.component(a).moves()[m], word);
      DpasConfiguration next = cfg;
      next.input_pos = moved.input_pos;
      next.parts[a] = DpasPart{moved.state, std::move(moved.stack)};
      out.push_back({DpasStep{m, std::nullopt}, std::move(next)});
    }
    return out;
  }
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (i == a || moves_of(sys, cfg, i, word).empty()) continue;
    DpasConfiguration next = cfg;
    next.active = i;
    out.push_back({DpasStep{std::nullopt, i}, std::move(next)});
  }
  return out;
}

bool is_accepting(const DpasSystem& sys, const DpasConfiguration& cfg, std::size_t word_length) {
  if (cfg.input_pos != word_length) return false;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const bool ok = sys.mode() == AcceptanceMode::EmptyStack
                        ? cfg.parts[i].stack.empty()
                        : sys.component(i).is_final(cfg.parts[i].state);
    if (!ok) return false;
  }
  return true;
}

Verdict<DpasStep> udpas_accepts(const DpasSystem& sys, std::span<const Symbol> word,
                                const Budget& budget) {
  check_word(sys.component(0), word);
  auto successors = [&](const DpasConfiguration& cfg) {
    std::vector<std::pair<DpasStep, DpasConfiguration>> out;
    for (auto& t : dpas_step(sys, cfg, word)) out.emplace_back(t.step, std::move(t.next));
    return out;
  };
  auto accepting = [&](const DpasConfiguration& cfg) {
    return is_accepting(sys, cfg, word.size());
  };
  return breadth_first_search<DpasConfiguration, DpasStep, DpasConfigurationHash>(
             initial_configurations(sys), successors, accepting, budget)
      .verdict;
}

MemberNpResult udpas_member_np(const Pda& component, std::size_t copies,
                               std::span<const Symbol> word, const Budget& budget) {
  if (copies == 0) throw std::invalid_argument("number of copies must be at least 1");
  check_word(component, word);
  MembershipOracle oracle(component, budget);

  const std::size_t len = word.size();
  std::vector<std::size_t> assign(len, 0);
  bool inconclusive = false;

  // Restricted-growth strings: copy c may be used only after copy c-1, which
  // skips assignments that differ by a renaming of identical copies.
  auto check = [&]() -> std::optional<bool> {
    std::vector<Word> parts(copies);
    for (std::size_t p = 0; p < len; ++p) parts[assign[p]].push_back(word[p]);
    bool unknown = false;
    for (const Word& part : parts) {
      const auto v = oracle.query(part);
      if (v == VerdictKind::Rejected) return false;
      if (v == VerdictKind::BudgetExhausted) unknown = true;
    }
    if (unknown) return std::nullopt;
    return true;
  };

  std::vector<std::size_t> prefix_max(len + 1, 0);  // highest copy used before position p, plus one
  while (true) {
    for (std::size_t p = 0; p < len; ++p) prefix_max[p + 1] = std::max(prefix_max[p], assign[p] + 1);
    const auto r = check();
    if (r && *r) return {VerdictKind::Accepted, assign};
    if (!r) inconclusive = true;

    // Next restricted-growth string in lexicographic order.
    std::size_t p = len;
    while (p > 0) {
      --p;
      const std::size_t limit = std::min(copies - 1, prefix_max[p]);
      if (assign[p] < limit) {
        ++assign[p];
        std::fill(assign.begin() + static_cast<std::ptrdiff_t>(p) + 1, assign.end(), 0);
        break;
      }
      if (p == 0) return {inconclusive ? VerdictKind::BudgetExhausted : VerdictKind::Rejected, {}};
    }
    if (len == 0) return {inconclusive ? VerdictKind::BudgetExhausted : VerdictKind::Rejected, {}};
  }
}

}  // namespace pdas
