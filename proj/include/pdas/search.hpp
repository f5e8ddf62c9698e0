#pragma once

// Breadth-first exploration of a configuration graph with duplicate
// suppression. Shared by the PDA, PCPA and DPAS engines.

#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdas/verdict.hpp"

namespace pdas {

template <class Config, class Step>
struct SearchResult {
  Verdict<Step> verdict;
  std::vector<Config> path;  // initial .. accepting configuration, when accepted
};

/// Explores from `initial` in FIFO order. `successors(cfg)` returns
/// (step, next) pairs in a fixed order; `accepting(cfg)` is tested when a
/// configuration is dequeued. The result depends only on the inputs.
template <class Config, class Step, class Hash, class Successors, class Accepting>
SearchResult<Config, Step> breadth_first_search(const std::vector<Config>& initial,
                                                Successors&& successors, Accepting&& accepting,
                                                const Budget& budget) {
  struct Node {
    const Config* config;
    std::size_t parent;
    std::optional<Step> step;
    std::size_t depth;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::unordered_map<Config, std::size_t, Hash> seen;
  std::vector<Node> nodes;
  std::deque<std::size_t> frontier;
  SearchResult<Config, Step> result;
  auto& stats = result.verdict.stats;
  bool limited = false;

  auto discover = [&](const Config& c, std::size_t parent, std::optional<Step> step,
                      std::size_t depth) {
    if (seen.count(c)) return;
    if (nodes.size() >= budget.max_configurations) {
      limited = true;
      return;
    }
    auto [it, _] = seen.emplace(c, nodes.size());
    nodes.push_back(Node{&it->first, parent, std::move(step), depth});
    frontier.push_back(nodes.size() - 1);
  };

  for (const auto& c : initial) discover(c, kNone, std::nullopt, 0);

  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    const Config& config = *nodes[idx].config;
    const std::size_t depth = nodes[idx].depth;
    if (depth > stats.depth) stats.depth = depth;

    if (accepting(config)) {
      std::vector<Step> steps;
      std::vector<Config> path;
      for (std::size_t i = idx; i != kNone; i = nodes[i].parent) {
        path.push_back(*nodes[i].config);
        if (nodes[i].step) steps.push_back(*nodes[i].step);
      }
      result.verdict.kind = VerdictKind::Accepted;
      result.verdict.witness = std::vector<Step>(steps.rbegin(), steps.rend());
      result.path.assign(path.rbegin(), path.rend());
      stats.configurations = nodes.size();
      return result;
    }

    auto next = successors(config);
    ++stats.expansions;
    if (next.empty()) continue;
    if (depth >= budget.max_steps) {
      limited = true;
      continue;
    }
    for (auto& [step, cfg] : next) discover(cfg, idx, std::move(step), depth + 1);
  }

  stats.configurations = nodes.size();
  result.verdict.kind = limited ? VerdictKind::BudgetExhausted : VerdictKind::Rejected;
  return result;
}

}  // namespace pdas
