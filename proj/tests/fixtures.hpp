#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "pdas/json_io.hpp"
#include "pdas/pda.hpp"
#include "pdas/post.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(PDAS_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// {a^n b^n | n >= 0}, final-state acceptance, deterministic.
inline pdas::Pda pda_ab(const char* a = "a", const char* b = "b", const char* A = "A",
                        const char* E = "E") {
  using pdas::make_move;
  pdas::PdaSpec s;
  s.states = {pdas::st("p"), pdas::st("q"), pdas::st("r")};
  s.input_alphabet = pdas::symbols({a, b});
  s.stack_alphabet = pdas::symbols({"Z", A, E});
  s.moves = {make_move("p", a, "Z", "q", {A, "Z"}), make_move("q", a, A, "q", {A, A}),
             make_move("q", b, A, "r", {}), make_move("r", b, A, "r", {}),
             make_move("r", "", "Z", "p", {E})};
  s.initial_state = pdas::st("p");
  s.bottom_symbol = pdas::sym("Z");
  s.final_states = {pdas::st("p")};
  return pdas::Pda(std::move(s));
}

inline pdas::Pda pda_cd() { return pda_ab("c", "d", "C", "F"); }

/// Nondeterministic {w w^R} over {a, b}: guesses the middle by an ε-move.
inline pdas::Pda pda_palindrome() {
  using pdas::make_move;
  pdas::PdaSpec s;
  s.states = {pdas::st("push"), pdas::st("pop"), pdas::st("done")};
  s.input_alphabet = pdas::symbols({"a", "b"});
  s.stack_alphabet = pdas::symbols({"Z", "A", "B"});
  for (const char* top : {"Z", "A", "B"}) {
    s.moves.push_back(make_move("push", "a", top, "push", {"A", top}));
    s.moves.push_back(make_move("push", "b", top, "push", {"B", top}));
    s.moves.push_back(make_move("push", "", top, "pop", {top}));
  }
  s.moves.push_back(make_move("pop", "a", "A", "pop", {}));
  s.moves.push_back(make_move("pop", "b", "B", "pop", {}));
  s.moves.push_back(make_move("pop", "", "Z", "done", {"Z"}));
  s.initial_state = pdas::st("push");
  s.bottom_symbol = pdas::sym("Z");
  s.final_states = {pdas::st("done")};
  return pdas::Pda(std::move(s));
}

/// Unary words of even length.
inline const char* kEvenSource =
    "alphabet: a\n"
    "L0: TEST empty->ACC, a->L1, '#'->REJ\n"
    "L1: TEST empty->REJ, a->L0, '#'->REJ\n"
    "ACC: ACCEPT\n"
    "REJ: REJECT\n";

inline pdas::PostProgram pm_even() { return pdas::parse_post(kEvenSource); }
inline pdas::PostProgram pm_anbn() { return pdas::parse_post(read_text("anbn.post")); }

}  // namespace fixtures
