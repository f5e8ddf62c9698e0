#include "doctest.h"
#include "fixtures.hpp"
#include "pdas/pcpa.hpp"
#include "pdas/report.hpp"

using namespace pdas;

namespace {

PcpaComponentSpec component(const char* q, const char* bottom, std::vector<Move> moves) {
  PcpaComponentSpec c;
  c.states = {st(q)};
  c.moves = std::move(moves);
  c.initial_state = st(q);
  c.bottom_symbol = sym(bottom);
  c.final_states = {st(q)};
  return c;
}

// Degree 2 over {a}: component 0 reads a on top a, component 1 reads a on top Z2.
PcpaSystem two_components() {
  PcpaSpec s;
  s.input_alphabet = symbols({"a"});
  s.stack_alphabet = symbols({"Z1", "Z2", "a", "b", "K1", "K2", "R"});
  s.components = {component("s", "Z1", {make_move("s", "a", "a", "s", {"a"})}),
                  component("t", "Z2", {make_move("t", "a", "Z2", "t", {"Z2"})})};
  s.query_symbols = symbols({"K1", "K2"});
  s.response_symbol = sym("R");
  return PcpaSystem(std::move(s));
}

PcpaSystem three_components() {
  PcpaSpec s;
  s.input_alphabet = symbols({"a"});
  s.stack_alphabet = symbols({"Z1", "Z2", "Z3", "a", "K1", "K2", "K3", "R"});
  s.components = {component("s", "Z1", {make_move("s", "a", "Z1", "s", {"Z1"})}),
                  component("t", "Z2", {make_move("t", "a", "Z2", "t", {"Z2"})}),
                  component("u", "Z3", {make_move("u", "a", "a", "u", {"a"})})};
  s.query_symbols = symbols({"K1", "K2", "K3"});
  return PcpaSystem(std::move(s));
}

PcpaConfiguration config(std::vector<std::pair<const char*, std::vector<Symbol>>> parts) {
  PcpaConfiguration c;
  for (auto& [q, stack] : parts) c.parts.push_back(PdaConfig{st(q), 0, stack});
  return c;
}

/// Degree-1 system wrapping a final-state PDA.
PcpaSystem single(const Pda& p) {
  PcpaSpec s;
  s.input_alphabet = p.input_alphabet();
  s.stack_alphabet = p.stack_alphabet();
  s.stack_alphabet.push_back(sym("K1"));
  s.stack_alphabet.push_back(sym("R"));
  PcpaComponentSpec c;
  c.states = p.states();
  c.moves = p.moves();
  c.initial_state = p.initial_state();
  c.bottom_symbol = p.bottom_symbol();
  c.final_states = p.final_states();
  s.components = {c};
  s.query_symbols = symbols({"K1"});
  return PcpaSystem(std::move(s));
}

}  // namespace

TEST_CASE("validate_system") {
  SUBCASE("degree-1 system without queries is centralized and flagged") {
    const PcpaSystem sys = single(fixtures::pda_ab());
    CHECK(sys.centralized());
    CHECK_FALSE(sys.has_queries());
  }
  SUBCASE("response symbol equal to a bottom symbol") {
    PcpaSpec s = two_components().spec();
    s.response_symbol = sym("Z2");
    CHECK_FALSE(check_system(s).empty());
    CHECK_THROWS_AS(PcpaSystem{s}, ValidationError);
  }
  SUBCASE("wrong number of query symbols") {
    PcpaSpec s = two_components().spec();
    s.query_symbols.pop_back();
    CHECK_FALSE(check_system(s).empty());
  }
  SUBCASE("duplicate query symbols") {
    PcpaSpec s = two_components().spec();
    s.query_symbols = symbols({"K1", "K1"});
    CHECK_FALSE(check_system(s).empty());
  }
  SUBCASE("an internal move consuming a stall top") {
    PcpaSpec s = two_components().spec();
    s.components[0].moves.push_back(make_move("s", "a", "K2", "s", {"Z1"}));
    CHECK_FALSE(check_system(s).empty());
  }
  SUBCASE("centralization follows who pushes queries") {
    PcpaSpec s = two_components().spec();
    s.components[0].moves.push_back(make_move("s", "", "Z1", "s", {"K2", "Z1"}));
    const PcpaSystem first(s);
    CHECK(first.has_queries());
    CHECK(first.centralized());
    s.components[1].moves.push_back(make_move("t", "", "Z2", "t", {"K1", "Z2"}));
    CHECK_FALSE(PcpaSystem(s).centralized());
  }
}

TEST_CASE("matched_pairs") {
  const PcpaSystem two = two_components();
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(matched_pairs(two, config({{"s", symbols({"R", "Z1"})}, {"t", symbols({"K1", "Z2"})}})) ==
        Pairs{{1, 0}});
  CHECK(matched_pairs(two, config({{"s", symbols({"K2", "Z1"})}, {"t", symbols({"K1", "Z2"})}}))
            .empty());
  const PcpaSystem three = three_components();
  CHECK(matched_pairs(three, config({{"s", symbols({"K2", "Z1"})},
                                     {"t", symbols({"R", "Z2"})},
                                     {"u", symbols({"K2", "Z3"})}})) == Pairs{{0, 1}, {2, 1}});
}

TEST_CASE("pcpa_step") {
  const PcpaSystem sys = two_components();
  const Word w = word_from_chars("a");

  SUBCASE("communication copies the source stack and resets the source") {
    const auto next =
        pcpa_step(sys, config({{"s", symbols({"R", "a", "Z1"})}, {"t", symbols({"K1", "Z2"})}}), w);
    REQUIRE(next.size() == 1);
    CHECK(next[0].step.kind == PcpaStep::Kind::Communication);
    CHECK(next[0].step.target == 1);
    CHECK(next[0].step.source == 0);
    CHECK(next[0].next.parts[0].stack == symbols({"Z1"}));
    CHECK(next[0].next.parts[1].stack == symbols({"a", "Z1", "Z2"}));
    CHECK(next[0].next.parts[0].input_pos == 0);
    CHECK(next[0].next.parts[1].state == st("t"));
  }
  SUBCASE("a stalled component idles") {
    const auto next =
        pcpa_step(sys, config({{"s", symbols({"a", "Z1"})}, {"t", symbols({"K1", "Z2"})}}), w);
    REQUIRE(next.size() == 1);
    CHECK(next[0].step.kind == PcpaStep::Kind::Internal);
    CHECK(next[0].step.moves == std::vector<std::optional<std::size_t>>{0, std::nullopt});
    CHECK(next[0].next.parts[0].input_pos == 1);
    CHECK(next[0].next.parts[1] == PdaConfig{st("t"), 0, symbols({"K1", "Z2"})});
  }
  SUBCASE("communication has priority over internal moves") {
    const PcpaSystem three = three_components();
    const auto next = pcpa_step(three,
                                config({{"s", symbols({"R", "Z1"})},
                                        {"t", symbols({"K1", "Z2"})},
                                        {"u", symbols({"a", "Z3"})}}),
                                w);
    REQUIRE(next.size() == 1);
    CHECK(next[0].step.kind == PcpaStep::Kind::Communication);
    CHECK(next[0].next.parts[2].input_pos == 0);
  }
  SUBCASE("strict step needs every non-stalled component to move") {
    const auto cfg = config({{"s", symbols({"a", "Z1"})}, {"t", symbols({"b", "Z2"})}});
    CHECK(pcpa_step(sys, cfg, w).empty());
    const auto relaxed = pcpa_step(sys, cfg, w, StepSemantics::Relaxed);
    REQUIRE(relaxed.size() == 1);
    CHECK(relaxed[0].step.moves == std::vector<std::optional<std::size_t>>{0, std::nullopt});
  }
  SUBCASE("nothing moves, nothing follows") {
    const auto cfg = config({{"s", symbols({"K2", "Z1"})}, {"t", symbols({"K1", "Z2"})}});
    CHECK(pcpa_step(sys, cfg, w).empty());
    CHECK(pcpa_step(sys, cfg, w, StepSemantics::Relaxed).empty());
  }
}

TEST_CASE("degree-1 system agrees with its component") {
  const Pda p = fixtures::pda_ab();
  const PcpaSystem sys = single(p);
  for (const Word& w : all_words(p.input_alphabet(), 4))
    CHECK(pcpa_accepts(sys, w).kind == pda_accepts(p, w).kind);
}

TEST_CASE("pcpa_accepts budget and input validation") {
  const PcpaSystem sys = single(fixtures::pda_ab());
  CHECK(pcpa_accepts(sys, word_from_chars("ab")).accepted());
  CHECK(pcpa_accepts(sys, word_from_chars("ab"), Budget(100000, 1)).exhausted());
  CHECK_THROWS_AS(pcpa_accepts(sys, word_from_tokens("a K1")), InputError);
  CHECK_THROWS_AS(pcpa_accepts(sys, word_from_tokens("R")), InputError);
}

TEST_CASE("acceptance quantifier") {
  PcpaSpec s = two_components().spec();
  s.components[1].final_states.clear();
  const PcpaSystem all(s);
  const Word w = word_from_chars("");
  CHECK(pcpa_accepts(all, w).rejected());
  CHECK(pcpa_accepts(all.with_quantifier(Quantifier::Some), w).accepted());
}

TEST_CASE("run_trace reports the first branching step") {
  PcpaSpec s = single(fixtures::pda_ab()).spec();
  s.components[0].moves.push_back(make_move("p", "a", "Z", "r", {"Z"}));
  const PcpaSystem sys(s);
  const PcpaTrace t = run_trace(sys, word_from_chars("ab"), 100);
  CHECK(t.end == TraceEnd::Nondeterministic);
  REQUIRE(t.violation_at);
  CHECK(*t.violation_at == 0);
  CHECK(t.branches.size() == 2);

  const PcpaTrace ok = run_trace(single(fixtures::pda_ab()), word_from_chars("aabb"), 100);
  CHECK(ok.end == TraceEnd::Accepted);
  CHECK(ok.configurations.size() == ok.steps.size() + 1);
  CHECK(run_trace(single(fixtures::pda_ab()), word_from_chars("aab"), 100).end == TraceEnd::Stuck);
  CHECK(run_trace(single(fixtures::pda_ab()), word_from_chars("aabb"), 2).end == TraceEnd::StepLimit);
}
