#pragma once

// Compiles a Post machine into a degree-2 returning PCPA.
//
// Component 1 loads the input onto its stack (so the stack read top-down is
// the queue, head first) and then runs the program. Dequeuing is a local pop.
// Enqueuing and rotation ship the whole stack to component 2 and back: the
// returned content lands on top of what component 1 pushed in the meantime,
// which is therefore at the back of the queue. Component 2 only reads its
// input and then alternates between asking for component 1's stack and
// offering it back.
//
// Stack layout of component 1 between instructions, top first:
//
//   queue front ... ¢ ... queue back
//
// interleaved with garbage bottom symbols Z1/Z2 left over from transfers. A
// TEST scans past garbage; reaching ¢ means the part above it is used up, so
// the stack is rotated (everything below ¢ moves above a fresh ¢). Reaching
// ¢ again in the same TEST proves the queue is empty.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdas/pcpa.hpp"
#include "pdas/post.hpp"
#include "pdas/report.hpp"

namespace pdas {

enum class CompileMode {
  Endmarker,  // input is reverse(w) followed by $; both components deterministic
  Faithful,   // input is reverse(w); end of input is guessed by ε-moves
};

struct CompilationOptions {
  CompileMode mode = CompileMode::Endmarker;
  std::string prefix;  // prepended to every generated state and internal symbol
};

struct CompiledSystem {
  PcpaSystem system;
  CompileMode mode;
  Symbol endmarker;
  std::string contract;

  // Internal symbols of component 1's queue encoding.
  Symbol sentinel;
  Symbol garbage1;
  Symbol garbage2;

  /// Component-1 state that starts executing each Post instruction.
  std::vector<State> entry_states;
  /// Per component-1 move: true when taking it completes one Post step (or
  /// the load phase). The simulated queue is on the stack once component 1
  /// next has a non-stall top.
  std::vector<bool> boundary_moves;

  /// The PCPA input corresponding to Post input `w`.
  Word input_for(const Word& w) const;
};

/// Throws std::invalid_argument when a generated name collides with the
/// program's alphabet.
CompiledSystem compile(const PostProgram& prog, const CompilationOptions& opts = {});

/// Runs the program and the compiled system on every word of length at most
/// `max_len`. lhs = Post verdict, rhs = PCPA verdict.
ComparisonReport verify_compilation(const PostProgram& prog, std::size_t max_len,
                                    const Budget& budget, const CompilationOptions& opts = {});

}  // namespace pdas
