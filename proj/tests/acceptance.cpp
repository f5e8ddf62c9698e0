// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "pdas/compile.hpp"
#include "pdas/dpas.hpp"
#include "pdas/reduction.hpp"
#include "pdas/shuffle.hpp"

using namespace pdas;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string report_line(const ComparisonReport& r) {
  return std::to_string(r.agreements) + "/" + std::to_string(r.rows.size()) + " agree, " +
         std::to_string(r.disagreements) + " disagree, " + std::to_string(r.inconclusive) +
         " inconclusive";
}

void compiled_differential(Result& r) {
  const std::pair<const char*, PostProgram> programs[] = {{"even", fixtures::pm_even()},
                                                          {"anbn", fixtures::pm_anbn()}};
  for (const auto& [name, prog] : programs) {
    for (CompileMode mode : {CompileMode::Endmarker, CompileMode::Faithful}) {
      const auto rep = verify_compilation(prog, 6, Budget(100000, 100000), {mode, ""});
      const std::string label =
          std::string(name) + (mode == CompileMode::Endmarker ? "/endmarker" : "/faithful");
      r.detail << " " << label << ": " << report_line(rep) << ";";
      r.require(rep.all_agree(), label);
    }
  }
}

void compiled_determinism(Result& r) {
  for (const PostProgram& prog : {fixtures::pm_even(), fixtures::pm_anbn()}) {
    const CompiledSystem cs = compile(prog);
    r.require(is_deterministic(cs.system.component(0)).deterministic, "component 1 deterministic");
    r.require(is_deterministic(cs.system.component(1)).deterministic, "component 2 deterministic");
    r.require(cs.system.degree() == 2 && !cs.system.centralized(), "non-centralized degree 2");
    std::size_t traces = 0, violations = 0;
    for (const Word& w : all_words(prog.input_alphabet(), 6)) {
      ++traces;
      if (run_trace(cs.system, cs.input_for(w), 100000).end == TraceEnd::Nondeterministic) ++violations;
    }
    r.detail << " " << traces << " traces, " << violations << " violations;";
    r.require(violations == 0, "trace determinism");
  }
}

PcpaComponentSpec component(const char* q, const char* bottom, std::vector<Move> moves) {
  PcpaComponentSpec c;
  c.states = {st(q)};
  c.moves = std::move(moves);
  c.initial_state = st(q);
  c.bottom_symbol = sym(bottom);
  c.final_states = {st(q)};
  return c;
}

PcpaConfiguration config(std::vector<std::pair<const char*, Stack>> parts) {
  PcpaConfiguration c;
  for (auto& [q, stack] : parts) c.parts.push_back(PdaConfig{st(q), 0, stack});
  return c;
}

void pcpa_step_cases(Result& r) {
  PcpaSpec s;
  s.input_alphabet = symbols({"a"});
  s.stack_alphabet = symbols({"Z1", "Z2", "Z3", "a", "b", "K1", "K2", "K3", "R"});
  s.components = {component("s", "Z1", {make_move("s", "a", "a", "s", {"a"})}),
                  component("t", "Z2", {make_move("t", "a", "Z2", "t", {"Z2"})})};
  s.query_symbols = symbols({"K1", "K2"});
  const PcpaSystem two(s);
  const Word w = word_from_chars("a");

  const auto comm = pcpa_step(two, config({{"s", symbols({"R", "a", "Z1"})}, {"t", symbols({"K1", "Z2"})}}), w);
  r.require(comm.size() == 1 && comm[0].next.parts[0].stack == symbols({"Z1"}) &&
                comm[0].next.parts[1].stack == symbols({"a", "Z1", "Z2"}),
            "communication");

  const auto stall = pcpa_step(two, config({{"s", symbols({"a", "Z1"})}, {"t", symbols({"K1", "Z2"})}}), w);
  r.require(stall.size() == 1 && stall[0].next.parts[0].input_pos == 1 &&
                stall[0].next.parts[1].stack == symbols({"K1", "Z2"}),
            "stall");

  const auto strict = pcpa_step(two, config({{"s", symbols({"a", "Z1"})}, {"t", symbols({"b", "Z2"})}}), w);
  r.require(strict.empty(), "strict internal step");

  PcpaSpec s3 = s;
  s3.components.push_back(component("u", "Z3", {make_move("u", "a", "a", "u", {"a"})}));
  s3.query_symbols = symbols({"K1", "K2", "K3"});
  const PcpaSystem three(s3);
  const auto prio = pcpa_step(
      three, config({{"s", symbols({"R", "Z1"})}, {"t", symbols({"K1", "Z2"})}, {"u", symbols({"a", "Z3"})}}), w);
  r.require(prio.size() == 1 && prio[0].step.kind == PcpaStep::Kind::Communication, "priority");
  const auto pairs = matched_pairs(
      three, config({{"s", symbols({"K2", "Z1"})}, {"t", symbols({"R", "Z2"})}, {"u", symbols({"K2", "Z3"})}}));
  r.require(pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 1}}, "matched pairs");
  r.detail << " communication, stall, strict, priority, matching checked;";
}

void reduction_equivalence(Result& r) {
  const auto rep = verify_reduction(fixtures::pda_ab(), fixtures::pda_cd(), 4, Budget(1000000, 1000000));
  r.detail << " " << report_line(rep) << ";";
  r.require(rep.rows.size() == 341, "341 words");
  r.require(rep.disagreements == 0 && rep.inconclusive == 0, "zero disagreements, zero inconclusive");
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t v = 1;
  for (std::size_t i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

std::set<Word> words(std::initializer_list<const char*> ws) {
  std::set<Word> out;
  for (const char* w : ws) out.insert(word_from_chars(w));
  return out;
}

void shuffle_combinatorics(Result& r) {
  std::size_t cases = 0;
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t m = 0; m <= 5; ++m) {
      ++cases;
      r.require(shuffle_words(Word(n, sym("a")), Word(m, sym("b"))).size() == binomial(n + m, n),
                "binomial " + std::to_string(n) + "," + std::to_string(m));
    }
  r.require(shuffle_words(word_from_chars("ab"), Word{}) == words({"ab"}), "base case");
  r.require(shuffle_words(word_from_chars("a"), word_from_chars("b")) == words({"ab", "ba"}), "a|b");
  r.require(shuffle_words(word_from_chars("ab"), word_from_chars("cd")) ==
                words({"abcd", "acbd", "acdb", "cabd", "cadb", "cdab"}),
            "ab|cd");
  r.detail << " " << cases << " binomial counts, 3 recursion examples;";
}

void member_np(Result& r) {
  std::size_t single = 0, reduced = 0;
  for (const Pda& p : {fixtures::pda_ab(), fixtures::pda_palindrome(), to_empty_stack(fixtures::pda_ab())})
    for (const Word& w : all_words(p.input_alphabet(), 6)) {
      ++single;
      r.require(udpas_member_np(p, 1, w).kind == pda_accepts(p, w).kind, "n = 1");
    }
  const ReductionBundle b = build_reduction(fixtures::pda_ab(), fixtures::pda_cd());
  const DpasSystem two = DpasSystem::uniform(b.c, 2, AcceptanceMode::EmptyStack);
  for (const Word& w : all_words(b.a.input_alphabet(), 4)) {
    ++reduced;
    const Word wp = transform_input(w, b.hash, b.dollar);
    const auto np = udpas_member_np(b.c, 2, wp).kind;
    const auto op = udpas_accepts(two, wp).kind;
    r.require(np == op, "reduction instance " + to_string(w));
  }
  r.detail << " " << single << " single-copy words, " << reduced << " reduction instances;";
}

/// Plain depth-first enumeration of move sequences, no duplicate suppression.
bool oracle_accepts(const Pda& p, const Word& w, const PdaConfig& c, std::size_t depth) {
  if (is_accepting(p, c, w.size())) return true;
  if (depth == 0) return false;
  for (std::size_t m : applicable_moves(p, c, w))
    if (oracle_accepts(p, w, apply_move(c, p.moves()[m], w), depth - 1)) return true;
  return false;
}

void core_oracle(Result& r) {
  std::size_t checked = 0;
  for (const Pda& p : {fixtures::pda_ab(), fixtures::pda_cd(), fixtures::pda_palindrome(),
                       to_empty_stack(fixtures::pda_ab()), to_empty_stack(fixtures::pda_palindrome())})
    for (const Word& w : all_words(p.input_alphabet(), 4)) {
      ++checked;
      const bool oracle = oracle_accepts(p, w, initial_config(p), 12);
      const auto v = pda_accepts(p, w);
      r.require(!v.exhausted() && v.accepted() == oracle, "word " + to_string(w));
    }
  r.detail << " " << checked << " words across 5 machines;";
}

void post_interpreter(Result& r) {
  std::size_t steps = 0;
  auto deltas_ok = [&](const PostRun& run) {
    for (std::size_t i = 1; i < run.trace.size(); ++i) {
      ++steps;
      const long d = static_cast<long>(run.trace[i].queue.size()) - static_cast<long>(run.trace[i - 1].queue.size());
      if (d < -1 || d > 1) return false;
    }
    return true;
  };
  const PostProgram even = fixtures::pm_even();
  for (std::size_t n = 0; n <= 8; ++n) {
    const PostRun run = post_run(even, Word(n, sym("a")));
    r.require(run.verdict == (n % 2 ? VerdictKind::Rejected : VerdictKind::Accepted), "parity " + std::to_string(n));
    r.require(deltas_ok(run), "queue delta");
  }
  const PostProgram anbn = fixtures::pm_anbn();
  for (const Word& w : all_words(anbn.input_alphabet(), 6)) r.require(deltas_ok(post_run(anbn, w)), "queue delta");
  r.detail << " parity for |w| <= 8, " << steps << " steps checked;";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Result&)>> criteria[] = {
      {"compiled Post machines agree with the interpreter", compiled_differential},
      {"compiled systems are deterministic, non-centralized, degree 2", compiled_determinism},
      {"PCPA step relation unit cases", pcpa_step_cases},
      {"reduction agrees with shuffle membership", reduction_equivalence},
      {"shuffle combinatorics", shuffle_combinatorics},
      {"decomposition membership checker", member_np},
      {"BFS membership matches brute-force enumeration", core_oracle},
      {"Post interpreter parity and queue deltas", post_interpreter},
  };
  bool all = true;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    Result r;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << " - " << name << " ("
              << secs << "s)" << r.detail.str() << '\n';
    all = all && r.pass;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
