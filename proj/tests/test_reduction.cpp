#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "pdas/dpas.hpp"
#include "pdas/reduction.hpp"
#include "pdas/shuffle.hpp"

using namespace pdas;

namespace {

// {ab}, final-state acceptance.
Pda just_ab() {
  PdaSpec s;
  s.states = {st("s0"), st("s1"), st("s2")};
  s.input_alphabet = symbols({"a", "b"});
  s.stack_alphabet = symbols({"Z"});
  s.moves = {make_move("s0", "a", "Z", "s1", {"Z"}), make_move("s1", "b", "Z", "s2", {"Z"})};
  s.initial_state = st("s0");
  s.bottom_symbol = sym("Z");
  s.final_states = {st("s2")};
  return Pda(std::move(s));
}

// {#}* over {a, b, #}.
Pda hash_star() {
  PdaSpec s;
  s.states = {st("h")};
  s.input_alphabet = symbols({"a", "b", "#"});
  s.stack_alphabet = symbols({"Z"});
  s.moves = {make_move("h", "#", "Z", "h", {"Z"})};
  s.initial_state = st("h");
  s.final_states = {st("h")};
  s.bottom_symbol = sym("Z");
  return Pda(std::move(s));
}

Pda widen(const Pda& p, std::vector<Symbol> alphabet) {
  PdaSpec s = p.spec();
  s.input_alphabet = std::move(alphabet);
  return Pda(std::move(s));
}

}  // namespace

TEST_CASE("transform_input") {
  const Symbol h = sym("#"), d = sym("$");
  CHECK(transform_input(word_from_chars("ab"), h, d) == word_from_chars("#$#a#b"));
  CHECK(transform_input(Word{}, h, d) == word_from_chars("#$"));
  CHECK(transform_input(word_from_chars("abc"), h, d) == word_from_chars("#$#a#b#c"));
  CHECK_THROWS_AS(transform_input(word_from_chars("a#"), h, d), InputError);
  CHECK_THROWS_AS(transform_input(word_from_chars("$"), h, d), InputError);
}

TEST_CASE("add_hash_selfloops") {
  const Pda a = just_ab();
  const Pda ap = add_hash_selfloops(a, sym("#"));
  CHECK(pda_accepts(ap, word_from_chars("#a##b#")).accepted());
  CHECK(pda_accepts(ap, word_from_chars("a#b")).accepted());
  CHECK(pda_accepts(ap, word_from_chars("ab")).accepted());
  CHECK(pda_accepts(ap, word_from_chars("ba")).rejected());
  CHECK_THROWS_AS(add_hash_selfloops(ap, sym("#")), std::invalid_argument);

  const Pda wide = widen(a, symbols({"a", "b", "#"}));
  const Pda star = hash_star();
  for (const Word& w : all_words(ap.input_alphabet(), 4))
    CHECK(pda_accepts(ap, w).kind == shuffle_member2(w, wide, star).kind);
}

TEST_CASE("doubling") {
  const Symbol h = sym("#");
  const Pda ap = add_hash_selfloops(to_empty_stack(just_ab()), h);
  const Pda add = make_a_doubled(ap, h);
  const Pda bdd = make_b_doubled(ap, h);
  CHECK(add.states().size() == 2 * ap.states().size());
  CHECK(add.final_states() == ap.final_states());
  CHECK(bdd.states().size() == 2 * ap.states().size());
  for (const Word& w : all_words(ap.input_alphabet(), 4)) {
    CHECK(pda_accepts(add, w).kind == pda_accepts(ap, w).kind);
    CHECK(pda_accepts(bdd, w).kind == pda_accepts(ap, w).kind);
  }

  const Stack z = symbols({"Z"});
  CHECK(applicable_moves(add, PdaConfig{st("s1^"), 0, z}, word_from_chars("#")).empty());
  CHECK(applicable_moves(bdd, PdaConfig{st("s1^"), 0, z}, word_from_chars("b")).empty());
  for (const Move& m : bdd.moves())
    if (m.from.name().back() == '^') CHECK(m.input == std::optional<Symbol>{h});
}

TEST_CASE("build_reduction on aⁿbⁿ and cᵐdᵐ") {
  const ReductionBundle r = build_reduction(fixtures::pda_ab(), fixtures::pda_cd());
  CHECK(r.c.initial_state() == st("q_C"));
  CHECK_FALSE(r.c.is_final(st("q_C")));
  CHECK(r.c.states().size() == r.a_doubled.states().size() + r.b_doubled.states().size() + 1);
  CHECK(r.a.bottom_symbol() == r.b.bottom_symbol());
  CHECK(r.a.mode() == AcceptanceMode::EmptyStack);
  CHECK(r.a.input_alphabet() == symbols({"a", "b", "c", "d"}));
  CHECK(applicable_moves(r.c, initial_config(r.c), word_from_chars("a")).empty());
  CHECK(pda_accepts(r.c, word_from_chars("##a#b")).accepted());

  const DpasSystem two = DpasSystem::uniform(r.c, 2, AcceptanceMode::EmptyStack);
  CHECK(two.is_uniform());
  CHECK(udpas_accepts(two, transform_input(word_from_chars("acbd"), r.hash, r.dollar)).accepted());
  CHECK(udpas_accepts(two, transform_input(word_from_chars("ad"), r.hash, r.dollar)).rejected());

  const ReductionBundle again = build_reduction(fixtures::pda_ab(), fixtures::pda_cd());
  CHECK(again.c == r.c);

  CHECK_THROWS_AS(build_reduction(fixtures::pda_ab(), fixtures::pda_cd(), sym("#"), sym("#")),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_reduction(fixtures::pda_ab(), fixtures::pda_cd(), sym("a"), sym("$")),
                  std::invalid_argument);
}

TEST_CASE("A' accepts a#b when L(A) = {ab}") {
  const ReductionBundle r = build_reduction(just_ab(), just_ab());
  CHECK(pda_accepts(r.a_prime, word_from_chars("a#b")).accepted());
}

TEST_CASE("verify_reduction up to length 3") {
  const auto report = verify_reduction(fixtures::pda_ab(), fixtures::pda_cd(), 3);
  CHECK(report.rows.size() == 85);
  CHECK(report.all_agree());
}
