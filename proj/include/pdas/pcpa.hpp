#pragma once

// Parallel communicating pushdown automata in returning mode.
//
// k components read private copies of one input in lock-step. A component
// whose top is the query symbol K_j receives the whole stack of component j
// once j shows the response symbol R on top; j is then reset to its bottom
// symbol. Communication takes priority over internal moves.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdas/pda.hpp"

namespace pdas {

enum class Quantifier { All, Some };
enum class StepSemantics { Strict, Relaxed };

/// A component description; alphabets are shared system-wide.
struct PcpaComponentSpec {
  std::vector<State> states;
  std::vector<Move> moves;
  State initial_state{"q0"};
  Symbol bottom_symbol{"Z"};
  std::vector<State> final_states;
};

struct PcpaSpec {
  std::vector<Symbol> input_alphabet;
  std::vector<Symbol> stack_alphabet;
  std::vector<PcpaComponentSpec> components;
  std::vector<Symbol> query_symbols;  // query_symbols[j] asks component j
  Symbol response_symbol{"R"};
  Quantifier quantifier = Quantifier::All;
};

std::vector<ValidationIssue> check_system(const PcpaSpec& spec);

class PcpaSystem {
 public:
  /// Throws ValidationError.
  explicit PcpaSystem(PcpaSpec spec);

  const PcpaSpec& spec() const { return spec_; }
  std::size_t degree() const { return components_.size(); }
  const Pda& component(std::size_t i) const { return components_.at(i); }
  const std::vector<Pda>& components() const { return components_; }
  const std::vector<Symbol>& query_symbols() const { return spec_.query_symbols; }
  Symbol response_symbol() const { return spec_.response_symbol; }
  Quantifier quantifier() const { return spec_.quantifier; }

  /// Index j when `d` is K_j.
  std::optional<std::size_t> query_index(Symbol d) const;
  bool is_stall_symbol(Symbol d) const;

  /// Only component 0 pushes query symbols (vacuously true without queries).
  bool centralized() const { return centralized_; }
  /// Some move of some component pushes a query symbol.
  bool has_queries() const { return has_queries_; }

  PcpaSystem with_quantifier(Quantifier q) const;

 private:
  PcpaSpec spec_;
  std::vector<Pda> components_;
  bool centralized_ = true;
  bool has_queries_ = false;
};

PcpaSystem validate_system(PcpaSpec spec);

struct PcpaConfiguration {
  std::vector<PdaConfig> parts;  // one (state, input position, stack) per component

  friend bool operator==(const PcpaConfiguration&, const PcpaConfiguration&) = default;
};

struct PcpaConfigurationHash {
  std::size_t operator()(const PcpaConfiguration& c) const {
    std::size_t h = c.parts.size();
    for (const auto& p : c.parts) h = hash_combine(h, PdaConfigHash{}(p));
    return h;
  }
};

PcpaConfiguration initial_configuration(const PcpaSystem& sys);

/// How one configuration became the next.
struct PcpaStep {
  enum class Kind { Communication, Internal };
  Kind kind = Kind::Internal;
  std::size_t target = 0;  // communication only
  std::size_t source = 0;  // communication only
  std::vector<std::optional<std::size_t>> moves;  // internal only: move index, or idle

  friend bool operator==(const PcpaStep&, const PcpaStep&) = default;
};

struct PcpaTransition {
  PcpaStep step;
  PcpaConfiguration next;
};

/// (target, source) pairs, zero-based: target's top is K_source and source's
/// top is R.
std::vector<std::pair<std::size_t, std::size_t>> matched_pairs(const PcpaSystem& sys,
                                                               const PcpaConfiguration& cfg);

/// All successors of `cfg`. Communication pairs are exclusive of internal
/// moves; an internal step in which no component moves has no successor.
std::vector<PcpaTransition> pcpa_step(const PcpaSystem& sys, const PcpaConfiguration& cfg,
                                      std::span<const Symbol> word,
                                      StepSemantics semantics = StepSemantics::Strict);

bool is_accepting(const PcpaSystem& sys, const PcpaConfiguration& cfg, std::size_t word_length);

/// Throws InputError for symbols outside V or naming a query/response symbol.
void check_word(const PcpaSystem& sys, std::span<const Symbol> word);

Verdict<PcpaStep> pcpa_accepts(const PcpaSystem& sys, std::span<const Symbol> word,
                               const Budget& budget = {},
                               StepSemantics semantics = StepSemantics::Strict);

enum class TraceEnd { Accepted, Stuck, StepLimit, Nondeterministic };

std::string_view to_string(TraceEnd e);

struct PcpaTrace {
  std::vector<PcpaConfiguration> configurations;  // starts with the initial one
  std::vector<PcpaStep> steps;
  TraceEnd end = TraceEnd::Stuck;
  /// When end == Nondeterministic: index of the configuration with several
  /// successors, and those successors.
  std::optional<std::size_t> violation_at;
  std::vector<PcpaTransition> branches;
};

/// Follows the unique successor chain from the initial configuration.
PcpaTrace run_trace(const PcpaSystem& sys, std::span<const Symbol> word, std::size_t max_steps,
                    StepSemantics semantics = StepSemantics::Strict);

}  // namespace pdas
