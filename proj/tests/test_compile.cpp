#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "pdas/compile.hpp"

using namespace pdas;

namespace {

/// Walks the deterministic trace of the compiled system and, at every
/// checkpoint after a boundary move, compares component 0's stack (garbage
/// and sentinel removed) with the Post queue after the same number of steps.
void co_simulate(const PostProgram& prog, const CompiledSystem& cs, const Word& w) {
  const PostRun post = post_run(prog, w);
  const PcpaTrace trace = run_trace(cs.system, cs.input_for(w), 100000);
  REQUIRE(trace.end != TraceEnd::Nondeterministic);

  std::size_t boundaries = 0;
  bool pending = false;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const PcpaStep& step = trace.steps[i];
    if (step.kind == PcpaStep::Kind::Internal && step.moves[0] && cs.boundary_moves[*step.moves[0]])
      pending = true;
    const Stack& stack = trace.configurations[i + 1].parts[0].stack;
    if (!pending || stack.empty() || cs.system.is_stall_symbol(stack.front())) continue;
    pending = false;

    Stack queue;
    for (Symbol d : stack)
      if (d != cs.garbage1 && d != cs.garbage2 && d != cs.sentinel) queue.push_back(d);
    CHECK(std::count(stack.begin(), stack.end(), cs.sentinel) == 1);
    REQUIRE(boundaries < post.trace.size());
    const auto& expected = post.trace[boundaries].queue;
    CHECK(queue == Stack(expected.begin(), expected.end()));
    ++boundaries;
  }
  CHECK(boundaries == post.trace.size());
}

}  // namespace

TEST_CASE("compiled PM-EVEN is a non-centralized degree-2 system") {
  const CompiledSystem cs = compile(fixtures::pm_even());
  CHECK(cs.system.degree() == 2);
  CHECK(cs.system.has_queries());
  CHECK_FALSE(cs.system.centralized());
  CHECK(is_deterministic(cs.system.component(0)).deterministic);
  CHECK(is_deterministic(cs.system.component(1)).deterministic);
  CHECK(cs.entry_states.size() == fixtures::pm_even().instructions().size());
  CHECK(cs.boundary_moves.size() == cs.system.component(0).moves().size());
  CHECK_FALSE(cs.contract.empty());
}

TEST_CASE("compiled PM-EVEN verdicts") {
  const CompiledSystem cs = compile(fixtures::pm_even());
  CHECK(cs.input_for(word_from_chars("ab")) == word_from_chars("ba$"));
  CHECK(pcpa_accepts(cs.system, word_from_chars("$")).accepted());
  CHECK(pcpa_accepts(cs.system, word_from_chars("a$")).rejected());
  CHECK(pcpa_accepts(cs.system, word_from_chars("aa$")).accepted());
  CHECK(run_trace(cs.system, word_from_chars("aa$"), 10000).end == TraceEnd::Accepted);
  CHECK(run_trace(cs.system, word_from_chars("a$"), 10000).end == TraceEnd::Stuck);
}

TEST_CASE("faithful mode guesses the end of input") {
  const CompiledSystem cs = compile(fixtures::pm_even(), {CompileMode::Faithful, ""});
  CHECK(cs.input_for(word_from_chars("aa")) == word_from_chars("aa"));
  CHECK_FALSE(is_deterministic(cs.system.component(0)).deterministic);
  CHECK(pcpa_accepts(cs.system, word_from_chars("")).accepted());
  CHECK(pcpa_accepts(cs.system, word_from_chars("aaa")).rejected());
  CHECK(pcpa_accepts(cs.system, word_from_chars("aaaa")).accepted());
}

TEST_CASE("generated names") {
  const CompiledSystem plain = compile(fixtures::pm_even());
  CHECK(plain.sentinel == sym("¢"));
  const CompiledSystem prefixed = compile(fixtures::pm_even(), {CompileMode::Endmarker, "x_"});
  CHECK(prefixed.sentinel == sym("x_¢"));
  CHECK(prefixed.endmarker == sym("x_$"));
  CHECK(pcpa_accepts(prefixed.system, word_from_tokens("a a x_$")).accepted());

  const PostProgram clash = parse_post("alphabet: Z1\nL: ACCEPT\n");
  CHECK_THROWS_AS(compile(clash), std::invalid_argument);
}

TEST_CASE("stack encodes the queue at every instruction boundary") {
  const PostProgram even = fixtures::pm_even();
  const CompiledSystem cs_even = compile(even);
  for (std::size_t n = 0; n <= 5; ++n) co_simulate(even, cs_even, Word(n, sym("a")));

  const PostProgram anbn = fixtures::pm_anbn();
  const CompiledSystem cs_anbn = compile(anbn);
  for (const char* w : {"", "ab", "aabb", "aab", "ba", "abab", "aaabbb"})
    co_simulate(anbn, cs_anbn, word_from_chars(w));
}

TEST_CASE("verify_compilation on both fixtures") {
  for (CompileMode mode : {CompileMode::Endmarker, CompileMode::Faithful}) {
    const auto even = verify_compilation(fixtures::pm_even(), 6, Budget{}, {mode, ""});
    CHECK(even.rows.size() == 7);
    CHECK(even.all_agree());
    const auto anbn = verify_compilation(fixtures::pm_anbn(), 4, Budget{}, {mode, ""});
    CHECK(anbn.rows.size() == 31);
    CHECK(anbn.all_agree());
  }
}
