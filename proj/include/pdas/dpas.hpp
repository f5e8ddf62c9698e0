#pragma once

// Distributed pushdown automata systems: n components take turns on one
// shared input. The active component keeps control while it has an
// applicable move; when it blocks, any other component that can move may
// take over.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pdas/pda.hpp"

namespace pdas {

class DpasSystem {
 public:
  /// Components must share one input alphabet. Throws std::invalid_argument.
  DpasSystem(std::vector<Pda> components, AcceptanceMode mode);

  /// n copies of one machine.
  static DpasSystem uniform(const Pda& component, std::size_t copies, AcceptanceMode mode);

  std::size_t size() const { return components_.size(); }
  const Pda& component(std::size_t i) const { return components_.at(i); }
  const std::vector<Pda>& components() const { return components_; }
  AcceptanceMode mode() const { return mode_; }
  /// All components are identical.
  bool is_uniform() const { return uniform_; }

 private:
  std::vector<Pda> components_;
  AcceptanceMode mode_;
  bool uniform_;
};

struct DpasPart {
  State state;
  Stack stack;  // topmost first

  friend bool operator==(const DpasPart&, const DpasPart&) = default;
};

struct DpasConfiguration {
  std::size_t input_pos = 0;
  std::vector<DpasPart> parts;
  std::size_t active = 0;

  friend bool operator==(const DpasConfiguration&, const DpasConfiguration&) = default;
};

struct DpasConfigurationHash {
  std::size_t operator()(const DpasConfiguration& c) const {
    std::size_t h = hash_combine(c.input_pos, c.active);
    for (const auto& p : c.parts) h = hash_combine(hash_combine(h, p.state.id()), hash_symbols(p.stack));
    return h;
  }
};

/// One successor: either the active component took move `move`, or control
/// passed to component `switched_to` (no move taken).
struct DpasStep {
  std::optional<std::size_t> move;
  std::optional<std::size_t> switched_to;

  friend bool operator==(const DpasStep&, const DpasStep&) = default;
};

struct DpasTransition {
  DpasStep step;
  DpasConfiguration next;
};

/// Initial configurations, one per choice of the first active component.
std::vector<DpasConfiguration> initial_configurations(const DpasSystem& sys);

std::vector<DpasTransition> dpas_step(const DpasSystem& sys, const DpasConfiguration& cfg,
                                      std::span<const Symbol> word);

bool is_accepting(const DpasSystem& sys, const DpasConfiguration& cfg, std::size_t word_length);

/// Operational membership: input consumed and every component satisfies the
/// acceptance mode (empty stack / final state).
Verdict<DpasStep> udpas_accepts(const DpasSystem& sys, std::span<const Symbol> word,
                                const Budget& budget = {});

struct MemberNpResult {
  VerdictKind kind = VerdictKind::Rejected;
  /// Copy index (zero-based) for every input position, when accepted.
  std::optional<std::vector<std::size_t>> assignment;

  bool member() const { return kind == VerdictKind::Accepted; }
};

/// Decomposition check for n copies of `component`: is there a distribution
/// of the input positions among the copies such that every copy's subword
/// is in L(component)? Assignments are enumerated up to renaming of copies,
/// in lexicographic order. `budget` applies to each single-copy membership
/// query.
MemberNpResult udpas_member_np(const Pda& component, std::size_t copies,
                               std::span<const Symbol> word, const Budget& budget = {});

}  // namespace pdas
