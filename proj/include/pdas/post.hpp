#pragma once

// Post machines: a finite program over one FIFO queue variable.

#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "pdas/symbol.hpp"
#include "pdas/verdict.hpp"

namespace pdas {

/// The auxiliary queue symbol every program may use besides its input alphabet.
inline Symbol post_marker() { return Symbol("#"); }

namespace post {

struct Accept {};
struct Reject {};

/// Branch on the queue: empty -> `on_empty` without consuming, otherwise
/// dequeue the head and jump by its symbol.
struct Test {
  std::size_t on_empty;
  std::unordered_map<Symbol, std::size_t> cases;
};

/// Enqueue `symbol` at the back, then continue at `next`.
struct Assign {
  Symbol symbol;
  std::size_t next;
};

using Instruction = std::variant<Accept, Reject, Test, Assign>;

}  // namespace post

class PostParseError : public std::runtime_error {
 public:
  PostParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A program with resolved jump targets. Instruction 0 is the entry point.
class PostProgram {
 public:
  PostProgram(std::vector<Symbol> alphabet, std::vector<std::string> labels,
              std::vector<post::Instruction> code);

  const std::vector<Symbol>& input_alphabet() const { return alphabet_; }
  /// Input alphabet plus the marker, in that order.
  std::vector<Symbol> queue_alphabet() const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<post::Instruction>& instructions() const { return code_; }
  const post::Instruction& at(std::size_t i) const { return code_.at(i); }
  std::size_t entry() const { return 0; }
  std::optional<std::size_t> find(std::string_view label) const;

  /// Source text that parses back to an equal program.
  std::string to_source() const;

 private:
  std::vector<Symbol> alphabet_;
  std::vector<std::string> labels_;
  std::vector<post::Instruction> code_;
};

/// Parses the line-oriented program format:
///
///   alphabet: a b
///   L0: TEST empty->L1, a->L2, b->L3, '#'->L4
///   L1: ASSIGN a -> L0
///   L2: ACCEPT
///   L3: REJECT
///
/// The first instruction is the entry point; `//` starts a comment.
PostProgram parse_post(std::string_view text);

struct PostState {
  std::size_t label;
  std::deque<Symbol> queue;  // head first

  friend bool operator==(const PostState&, const PostState&) = default;
};

enum class PostHalt { Accept, Reject };

/// One instruction. Returns the halt outcome when `st` sits on a HALT
/// instruction.
std::variant<PostState, PostHalt> post_step(const PostProgram& prog, const PostState& st);

struct PostRun {
  VerdictKind verdict = VerdictKind::BudgetExhausted;
  std::vector<PostState> trace;  // every visited state, halting one last
  std::size_t steps = 0;
};

/// Runs from (entry, input) for at most `max_steps` instructions.
PostRun post_run(const PostProgram& prog, const Word& input, std::size_t max_steps = 100000);

}  // namespace pdas
