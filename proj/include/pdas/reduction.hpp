#pragma once

// Reduction from two-language shuffle membership to membership for a uniform
// DPAS of two identical components.
//
// Given A and B, build one machine C whose two copies jointly accept
// #$#w1#w2...#wn exactly when w1...wn is in L(A) ⧢ L(B). The first # sends
// one copy into A's control, the $ sends the other into B's; every later #
// lets the copies hand the next letter to whichever owns it. A copy gives up
// control by moving to a "hatted" duplicate of its state that cannot read
// the next symbol.

#include <span>

#include "pdas/pda.hpp"
#include "pdas/report.hpp"

namespace pdas {

/// P with a self-loop on `hash` at every state, for every stack symbol.
/// Throws std::invalid_argument if `hash` is already an input symbol.
Pda add_hash_selfloops(const Pda& p, Symbol hash);

/// A'' from A': each state q gets a copy q^ carrying A's own moves (all
/// non-`hash` moves, targets unchanged), plus ε-moves q -> q^.
Pda make_a_doubled(const Pda& a_prime, Symbol hash);

/// B'' from B': each state q gets a copy q^ whose only moves read `hash` and
/// return to q, plus ε-moves q -> q^.
Pda make_b_doubled(const Pda& b_prime, Symbol hash);

/// Disjoint union of the two controls (states prefixed "A." and "B.") plus a
/// fresh initial state that reads `hash` into A'' or `dollar` into B''
/// without touching the stack. Both machines must share their bottom symbol.
Pda combine_c(const Pda& a_dd, const Pda& b_dd, Symbol hash, Symbol dollar);

/// #$#w1#w2...#wn. Throws InputError if `w` contains either marker.
Word transform_input(std::span<const Symbol> w, Symbol hash, Symbol dollar);

struct ReductionBundle {
  Pda a;  // normalized: own stack symbols, shared bottom, empty-stack acceptance
  Pda b;
  Pda a_prime;
  Pda b_prime;
  Pda a_doubled;
  Pda b_doubled;
  Pda c;
  Symbol hash;
  Symbol dollar;
};

/// Full pipeline: separate the stack alphabets, convert to empty-stack
/// acceptance (draining on entry to a final state), share one bottom symbol, merge input alphabets, add #-loops,
/// double the states, combine.
ReductionBundle build_reduction(const Pda& a, const Pda& b, Symbol hash = Symbol("#"),
                                Symbol dollar = Symbol("$"));

/// For every w over the union of the input alphabets with |w| <= max_len:
/// lhs = two copies of C on transform_input(w) (empty stack),
/// rhs = shuffle membership of w in L(a) ⧢ L(b).
ComparisonReport verify_reduction(const Pda& a, const Pda& b, std::size_t max_len,
                                  const Budget& budget = {});

}  // namespace pdas
