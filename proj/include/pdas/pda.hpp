#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pdas/symbol.hpp"
#include "pdas/verdict.hpp"

namespace pdas {

enum class AcceptanceMode { FinalState, EmptyStack };

/// One transition: in `from` with `top` on the stack, optionally reading
/// `input` (nullopt is ε), go to `to` and replace the top by `push`
/// (topmost first).
struct Move {
  State from;
  std::optional<Symbol> input;
  Symbol top;
  State to;
  std::vector<Symbol> push;

  bool is_epsilon() const { return !input.has_value(); }
  friend bool operator==(const Move&, const Move&) = default;
};

/// Shorthand for tables of moves; an empty `input` is ε.
Move make_move(std::string_view from, std::string_view input, std::string_view top,
               std::string_view to, std::initializer_list<std::string_view> push);

/// Unvalidated machine description. Order of every sequence is preserved.
struct PdaSpec {
  std::vector<State> states;
  std::vector<Symbol> input_alphabet;
  std::vector<Symbol> stack_alphabet;
  std::vector<Move> moves;
  State initial_state{"q0"};
  Symbol bottom_symbol{"Z"};
  std::vector<State> final_states;
  AcceptanceMode mode = AcceptanceMode::FinalState;

  friend bool operator==(const PdaSpec&, const PdaSpec&) = default;
};

struct ValidationIssue {
  std::string field;
  std::string value;
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

/// Every invariant violation in `spec`; empty when the description is valid.
std::vector<ValidationIssue> check_pda(const PdaSpec& spec);

/// A validated pushdown automaton. Immutable after construction.
class Pda {
 public:
  /// Throws ValidationError listing every violation.
  explicit Pda(PdaSpec spec);

  const PdaSpec& spec() const { return spec_; }
  const std::vector<State>& states() const { return spec_.states; }
  const std::vector<Symbol>& input_alphabet() const { return spec_.input_alphabet; }
  const std::vector<Symbol>& stack_alphabet() const { return spec_.stack_alphabet; }
  const std::vector<Move>& moves() const { return spec_.moves; }
  State initial_state() const { return spec_.initial_state; }
  Symbol bottom_symbol() const { return spec_.bottom_symbol; }
  const std::vector<State>& final_states() const { return spec_.final_states; }
  AcceptanceMode mode() const { return spec_.mode; }

  bool is_final(State q) const;
  bool has_input_symbol(Symbol a) const;
  bool has_stack_symbol(Symbol d) const;

  /// Indices into moves() leaving (q, top), in declaration order.
  std::span<const std::size_t> moves_from(State q, Symbol top) const;

  friend bool operator==(const Pda& a, const Pda& b) { return a.spec_ == b.spec_; }

 private:
  struct Key {
    State q;
    Symbol top;
    friend bool operator==(Key, Key) = default;
  };
  struct KeyHash {
    std::size_t operator()(Key k) const { return hash_combine(k.q.id(), k.top.id()); }
  };

  PdaSpec spec_;
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> index_;
  std::unordered_set<State> finals_;
  std::unordered_set<Symbol> inputs_;
  std::unordered_set<Symbol> stack_symbols_;
};

/// Same checks as the Pda constructor.
Pda validate_pda(PdaSpec spec);

struct PdaConfig {
  State state;
  std::size_t input_pos = 0;
  Stack stack;  // topmost first

  friend bool operator==(const PdaConfig&, const PdaConfig&) = default;
};

struct PdaConfigHash {
  std::size_t operator()(const PdaConfig& c) const {
    return hash_combine(hash_combine(c.state.id(), c.input_pos), hash_symbols(c.stack));
  }
};

PdaConfig initial_config(const Pda& pda);

/// Moves whose source state and top match `cfg` and which read either nothing
/// or the next input symbol. Returned as indices into pda.moves().
std::vector<std::size_t> applicable_moves(const Pda& pda, const PdaConfig& cfg,
                                          std::span<const Symbol> word);

/// Throws std::logic_error if `move` is not applicable to `cfg`.
PdaConfig apply_move(const PdaConfig& cfg, const Move& move, std::span<const Symbol> word);

bool is_accepting(const Pda& pda, const PdaConfig& cfg, std::size_t word_length);

/// Throws InputError if `word` leaves the input alphabet.
void check_word(const Pda& pda, std::span<const Symbol> word);

/// BFS membership test. Witness is the accepting move sequence (indices into
/// pda.moves()).
Verdict<std::size_t> pda_accepts(const Pda& pda, std::span<const Symbol> word,
                                 const Budget& budget = {});

struct DeterminismClash {
  State state;
  Symbol top;
  std::size_t first;   // move index
  std::size_t second;  // move index
};

struct DeterminismReport {
  bool deterministic = true;
  std::optional<DeterminismClash> clash;
};

/// Syntactic (DPDA-style) determinism: per (state, top) at most one ε-move,
/// at most one move per input symbol, and never an ε-move next to a reading one.
DeterminismReport is_deterministic(const Pda& pda);

/// Where the drain state of to_empty_stack is entered from.
enum class DrainEntry {
  FromFinalStates,  // ε-moves from every final state
  OnFinalEntry,     // a copy of every move into a final state, and no ε-move out of one
};

/// Equivalent empty-stack machine for a final-state machine. Fresh names are
/// made unique against the input's states and stack symbols.
///
/// OnFinalEntry keeps final states free of added ε-moves, so a machine
/// waiting in a final state can still block. The reduction relies on that.
Pda to_empty_stack(const Pda& pda, DrainEntry entry = DrainEntry::FromFinalStates);

/// Appends primes to `base` until `taken` returns false.
template <class Taken>
std::string fresh_name(std::string base, Taken&& taken) {
  while (taken(base)) base += '\'';
  return base;
}

}  // namespace pdas
