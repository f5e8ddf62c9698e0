#include "pdas/pda.hpp"

#include <algorithm>
#include <set>

#include "pdas/search.hpp"

namespace pdas {

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Accepted: return "accepted";
    case VerdictKind::Rejected: return "rejected";
    case VerdictKind::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

std::string join_messages(const std::vector<ValidationIssue>& issues) {
  std::string out = "invalid machine description:";
  for (const auto& i : issues) out += "\n  " + i.field + " '" + i.value + "': " + i.message;
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : std::runtime_error(join_messages(issues)), issues_(std::move(issues)) {}

std::vector<ValidationIssue> check_pda(const PdaSpec& spec) {
  std::vector<ValidationIssue> issues;
  auto report = [&](std::string field, const std::string& value, std::string msg) {
    issues.push_back({std::move(field), value, std::move(msg)});
  };

  std::unordered_set<State> states;
  for (State q : spec.states) {
    if (q.name().empty()) report("states", q.name(), "empty state name");
    if (!states.insert(q).second) report("states", q.name(), "duplicate state");
  }
  std::unordered_set<Symbol> inputs;
  for (Symbol a : spec.input_alphabet) {
    if (a.name().empty()) report("input_alphabet", a.name(), "empty symbol name");
    if (!inputs.insert(a).second) report("input_alphabet", a.name(), "duplicate symbol");
  }
  std::unordered_set<Symbol> stack;
  for (Symbol d : spec.stack_alphabet) {
    if (d.name().empty()) report("stack_alphabet", d.name(), "empty symbol name");
    if (!stack.insert(d).second) report("stack_alphabet", d.name(), "duplicate symbol");
  }

  if (!states.count(spec.initial_state))
    report("initial_state", spec.initial_state.name(), "unknown state");
  if (!stack.count(spec.bottom_symbol))
    report("bottom", spec.bottom_symbol.name(), "bottom symbol not in stack alphabet");
  for (State q : spec.final_states)
    if (!states.count(q)) report("finals", q.name(), "final state not in states");

  for (std::size_t i = 0; i < spec.moves.size(); ++i) {
    const Move& m = spec.moves[i];
    const std::string field = "transitions[" + std::to_string(i) + "]";
    if (!states.count(m.from)) report(field + ".from", m.from.name(), "unknown state");
    if (!states.count(m.to)) report(field + ".to", m.to.name(), "unknown state");
    if (m.input && !inputs.count(*m.input))
      report(field + ".input", m.input->name(), "unknown input symbol");
    if (!stack.count(m.top)) report(field + ".top", m.top.name(), "unknown stack symbol");
    for (Symbol d : m.push)
      if (!stack.count(d)) report(field + ".push", d.name(), "unknown stack symbol");
  }
  return issues;
}

Pda::Pda(PdaSpec spec) : spec_(std::move(spec)) {
  if (auto issues = check_pda(spec_); !issues.empty()) throw ValidationError(std::move(issues));
  for (std::size_t i = 0; i < spec_.moves.size(); ++i)
    index_[Key{spec_.moves[i].from, spec_.moves[i].top}].push_back(i);
  finals_.insert(spec_.final_states.begin(), spec_.final_states.end());
  inputs_.insert(spec_.input_alphabet.begin(), spec_.input_alphabet.end());
  stack_symbols_.insert(spec_.stack_alphabet.begin(), spec_.stack_alphabet.end());
}

bool Pda::is_final(State q) const { return finals_.count(q) != 0; }
bool Pda::has_input_symbol(Symbol a) const { return inputs_.count(a) != 0; }
bool Pda::has_stack_symbol(Symbol d) const { return stack_symbols_.count(d) != 0; }

std::span<const std::size_t> Pda::moves_from(State q, Symbol top) const {
  auto it = index_.find(Key{q, top});
  if (it == index_.end()) return {};
  return it->second;
}

Move make_move(std::string_view from, std::string_view input, std::string_view top,
               std::string_view to, std::initializer_list<std::string_view> push) {
  Move m{State(from), std::nullopt, Symbol(top), State(to), symbols(push)};
  if (!input.empty()) m.input = Symbol(input);
  return m;
}

Pda validate_pda(PdaSpec spec) { return Pda(std::move(spec)); }

PdaConfig initial_config(const Pda& pda) {
  return PdaConfig{pda.initial_state(), 0, Stack{pda.bottom_symbol()}};
}

std::vector<std::size_t> applicable_moves(const Pda& pda, const PdaConfig& cfg,
                                          std::span<const Symbol> word) {
  std::vector<std::size_t> out;
  if (cfg.stack.empty()) return out;
  const bool has_next = cfg.input_pos < word.size();
  for (std::size_t i : pda.moves_from(cfg.state, cfg.stack.front())) {
    const Move& m = pda.moves()[i];
    if (m.is_epsilon() || (has_next && *m.input == word[cfg.input_pos])) out.push_back(i);
  }
  return out;
}

PdaConfig apply_move(const PdaConfig& cfg, const Move& move, std::span<const Symbol> word) {
  const bool reads = !move.is_epsilon();
  if (cfg.state != move.from || cfg.stack.empty() || cfg.stack.front() != move.top ||
      (reads && (cfg.input_pos >= word.size() || word[cfg.input_pos] != *move.input)))
    throw std::logic_error("apply_move: move not applicable to configuration");

  PdaConfig next{move.to, cfg.input_pos + (reads ? 1 : 0), {}};
  next.stack.reserve(cfg.stack.size() - 1 + move.push.size());
  next.stack.insert(next.stack.end(), move.push.begin(), move.push.end());
  next.stack.insert(next.stack.end(), cfg.stack.begin() + 1, cfg.stack.end());
  return next;
}

bool is_accepting(const Pda& pda, const PdaConfig& cfg, std::size_t word_length) {
  if (cfg.input_pos != word_length) return false;
  return pda.mode() == AcceptanceMode::FinalState ? pda.is_final(cfg.state) : cfg.stack.empty();
}

void check_word(const Pda& pda, std::span<const Symbol> word) {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (!pda.has_input_symbol(word[i]))
      throw InputError("symbol '" + word[i].name() + "' at position " + std::to_string(i) +
                       " is not in the input alphabet");
}

Verdict<std::size_t> pda_accepts(const Pda& pda, std::span<const Symbol> word,
                                 const Budget& budget) {
  check_word(pda, word);
  auto successors = [&](const PdaConfig& cfg) {
    std::vector<std::pair<std::size_t, PdaConfig>> out;
    for (std::size_t i : applicable_moves(pda, cfg, word))
      out.emplace_back(i, apply_move(cfg, pda.moves()[i], word));
    return out;
  };
  auto accepting = [&](const PdaConfig& cfg) { return is_accepting(pda, cfg, word.size()); };
  return breadth_first_search<PdaConfig, std::size_t, PdaConfigHash>({initial_config(pda)},
                                                                       successors, accepting,
                                                                       budget)
      .verdict;
}

DeterminismReport is_deterministic(const Pda& pda) {
  // Walk moves in declaration order so the reported clash is reproducible.
  struct Seen {
    std::optional<std::size_t> epsilon;
    std::optional<std::size_t> any_reading;
    std::unordered_map<Symbol, std::size_t> by_symbol;
  };
  struct KeyHash {
    std::size_t operator()(const std::pair<State, Symbol>& k) const {
      return hash_combine(k.first.id(), k.second.id());
    }
  };
  std::unordered_map<std::pair<State, Symbol>, Seen, KeyHash> seen;
  const auto& moves = pda.moves();
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& m = moves[i];
    Seen& s = seen[{m.from, m.top}];
    std::optional<std::size_t> other;
    if (m.is_epsilon()) {
      other = s.epsilon ? s.epsilon : s.any_reading;
      if (!s.epsilon) s.epsilon = i;
    } else {
      if (s.epsilon) other = s.epsilon;
      else if (auto it = s.by_symbol.find(*m.input); it != s.by_symbol.end()) other = it->second;
      s.by_symbol.emplace(*m.input, i);
      if (!s.any_reading) s.any_reading = i;
    }
    if (other) return {false, DeterminismClash{m.from, m.top, *other, i}};
  }
  return {true, std::nullopt};
}

Pda to_empty_stack(const Pda& pda, DrainEntry entry) {
  if (pda.mode() != AcceptanceMode::FinalState)
    throw std::invalid_argument("to_empty_stack expects a final-state machine");

  std::set<std::string> state_names, stack_names;
  for (State q : pda.states()) state_names.insert(q.name());
  for (Symbol d : pda.stack_alphabet()) stack_names.insert(d.name());
  auto taken_state = [&](const std::string& n) { return state_names.count(n) != 0; };
  auto taken_symbol = [&](const std::string& n) { return stack_names.count(n) != 0; };

  const Symbol bottom(fresh_name("Z0", taken_symbol));
  const State init(fresh_name("q_init", taken_state));
  state_names.insert(init.name());
  const State drain(fresh_name("q_drain", taken_state));

  PdaSpec out = pda.spec();
  out.mode = AcceptanceMode::EmptyStack;
  out.states.insert(out.states.begin(), init);
  out.states.push_back(drain);
  out.stack_alphabet.push_back(bottom);
  out.initial_state = init;
  out.bottom_symbol = bottom;

  std::vector<Move> moves;
  moves.push_back(Move{init, std::nullopt, bottom, pda.initial_state(),
                       {pda.bottom_symbol(), bottom}});
  moves.insert(moves.end(), pda.moves().begin(), pda.moves().end());
  if (entry == DrainEntry::FromFinalStates) {
    for (State q : pda.final_states())
      for (Symbol d : out.stack_alphabet) moves.push_back(Move{q, std::nullopt, d, drain, {}});
  } else {
    if (pda.is_final(pda.initial_state())) moves.push_back(Move{init, std::nullopt, bottom, drain, {}});
    for (const Move& m : pda.moves())
      if (pda.is_final(m.to)) moves.push_back(Move{m.from, m.input, m.top, drain, {}});
  }
  for (Symbol d : out.stack_alphabet) moves.push_back(Move{drain, std::nullopt, d, drain, {}});
  out.moves = std::move(moves);
  return Pda(std::move(out));
}

}  // namespace pdas
