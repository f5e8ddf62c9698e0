#include "pdas/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "pdas/dpas.hpp"
#include "pdas/shuffle.hpp"

namespace pdas {

namespace {

template <class T>
void append_unique(std::vector<T>& v, T x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

/// Renames every stack-symbol occurrence through `f`.
template <class F>
PdaSpec map_stack_symbols(PdaSpec s, F&& f) {
  for (Symbol& d : s.stack_alphabet) d = f(d);
  s.bottom_symbol = f(s.bottom_symbol);
  for (Move& m : s.moves) {
    m.top = f(m.top);
    for (Symbol& d : m.push) d = f(d);
  }
  return s;
}

template <class F>
PdaSpec map_states(PdaSpec s, F&& f) {
  for (State& q : s.states) q = f(q);
  for (State& q : s.final_states) q = f(q);
  s.initial_state = f(s.initial_state);
  for (Move& m : s.moves) {
    m.from = f(m.from);
    m.to = f(m.to);
  }
  return s;
}

/// q -> q^ with primes appended until no clash with existing names.
std::unordered_map<State, State> hat_names(const Pda& p) {
  std::set<std::string> taken;
  for (State q : p.states()) taken.insert(q.name());
  std::unordered_map<State, State> hat;
  for (State q : p.states()) {
    const State h(fresh_name(q.name() + "^", [&](const std::string& n) { return taken.count(n) != 0; }));
    taken.insert(h.name());
    hat.emplace(q, h);
  }
  return hat;
}

}  // namespace

Pda add_hash_selfloops(const Pda& p, Symbol hash) {
  if (p.has_input_symbol(hash))
    throw std::invalid_argument("marker '" + hash.name() + "' collides with an input symbol");
  PdaSpec s = p.spec();
  s.input_alphabet.push_back(hash);
  for (State q : p.states())
    for (Symbol d : p.stack_alphabet()) s.moves.push_back(Move{q, hash, d, q, {d}});
  return Pda(std::move(s));
}

Pda make_a_doubled(const Pda& a_prime, Symbol hash) {
  const auto hat = hat_names(a_prime);
  PdaSpec s = a_prime.spec();
  for (State q : a_prime.states()) s.states.push_back(hat.at(q));
  for (const Move& m : a_prime.moves())
    if (m.input != hash) s.moves.push_back(Move{hat.at(m.from), m.input, m.top, m.to, m.push});
  for (State q : a_prime.states())
    for (Symbol d : a_prime.stack_alphabet())
      s.moves.push_back(Move{q, std::nullopt, d, hat.at(q), {d}});
  return Pda(std::move(s));
}

Pda make_b_doubled(const Pda& b_prime, Symbol hash) {
  const auto hat = hat_names(b_prime);
  PdaSpec s = b_prime.spec();
  for (State q : b_prime.states()) s.states.push_back(hat.at(q));
  for (State q : b_prime.states())
    for (Symbol d : b_prime.stack_alphabet()) s.moves.push_back(Move{hat.at(q), hash, d, q, {d}});
  for (State q : b_prime.states())
    for (Symbol d : b_prime.stack_alphabet())
      s.moves.push_back(Move{q, std::nullopt, d, hat.at(q), {d}});
  return Pda(std::move(s));
}

Pda combine_c(const Pda& a_dd, const Pda& b_dd, Symbol hash, Symbol dollar) {
  if (a_dd.bottom_symbol() != b_dd.bottom_symbol())
    throw std::invalid_argument("combine_c: machines must share their bottom symbol");
  if (a_dd.mode() != b_dd.mode())
    throw std::invalid_argument("combine_c: machines must share their acceptance mode");

  const PdaSpec a = map_states(a_dd.spec(), [](State q) { return State("A." + q.name()); });
  const PdaSpec b = map_states(b_dd.spec(), [](State q) { return State("B." + q.name()); });

  std::set<std::string> taken;
  for (State q : a.states) taken.insert(q.name());
  for (State q : b.states) taken.insert(q.name());
  const State start(fresh_name("q_C", [&](const std::string& n) { return taken.count(n) != 0; }));

  PdaSpec c;
  c.mode = a.mode;
  c.initial_state = start;
  c.bottom_symbol = a.bottom_symbol;
  c.states.push_back(start);
  c.states.insert(c.states.end(), a.states.begin(), a.states.end());
  c.states.insert(c.states.end(), b.states.begin(), b.states.end());
  c.input_alphabet = a.input_alphabet;
  for (Symbol x : b.input_alphabet) append_unique(c.input_alphabet, x);
  append_unique(c.input_alphabet, hash);
  append_unique(c.input_alphabet, dollar);
  c.stack_alphabet = a.stack_alphabet;
  for (Symbol d : b.stack_alphabet) append_unique(c.stack_alphabet, d);
  for (Symbol d : c.stack_alphabet) {
    c.moves.push_back(Move{start, hash, d, a.initial_state, {d}});
    c.moves.push_back(Move{start, dollar, d, b.initial_state, {d}});
  }
  c.moves.insert(c.moves.end(), a.moves.begin(), a.moves.end());
  c.moves.insert(c.moves.end(), b.moves.begin(), b.moves.end());
  c.final_states = a.final_states;
  c.final_states.insert(c.final_states.end(), b.final_states.begin(), b.final_states.end());
  return Pda(std::move(c));
}

Word transform_input(std::span<const Symbol> w, Symbol hash, Symbol dollar) {
  Word out{hash, dollar};
  for (Symbol x : w) {
    if (x == hash || x == dollar)
      throw InputError("word contains reserved marker '" + x.name() + "'");
    out.push_back(hash);
    out.push_back(x);
  }
  return out;
}

ReductionBundle build_reduction(const Pda& a, const Pda& b, Symbol hash, Symbol dollar) {
  if (hash == dollar) throw std::invalid_argument("the two markers must differ");
  for (const Pda* p : {&a, &b})
    if (p->has_input_symbol(hash) || p->has_input_symbol(dollar))
      throw std::invalid_argument("markers must not be input symbols of A or B");

  auto separate = [](const Pda& p, const std::string& tag) {
    return Pda(map_stack_symbols(p.spec(), [&](Symbol d) { return Symbol(tag + d.name()); }));
  };
  auto to_empty = [](const Pda& p) {
    return p.mode() == AcceptanceMode::EmptyStack ? p : to_empty_stack(p, DrainEntry::OnFinalEntry);
  };
  const Pda a_e = to_empty(separate(a, "A."));
  const Pda b_e = to_empty(separate(b, "B."));

  std::set<std::string> taken;
  for (const Pda* p : {&a_e, &b_e})
    for (Symbol d : p->stack_alphabet()) taken.insert(d.name());
  const Symbol bottom(fresh_name("Z", [&](const std::string& n) { return taken.count(n) != 0; }));

  std::vector<Symbol> sigma = a.input_alphabet();
  for (Symbol x : b.input_alphabet()) append_unique(sigma, x);

  auto normalize = [&](const Pda& p) {
    const Symbol old = p.bottom_symbol();
    PdaSpec s = map_stack_symbols(p.spec(), [&](Symbol d) { return d == old ? bottom : d; });
    s.input_alphabet = sigma;
    return Pda(std::move(s));
  };
  Pda a_n = normalize(a_e);
  Pda b_n = normalize(b_e);
  Pda a_p = add_hash_selfloops(a_n, hash);
  Pda b_p = add_hash_selfloops(b_n, hash);
  Pda a_dd = make_a_doubled(a_p, hash);
  Pda b_dd = make_b_doubled(b_p, hash);
  Pda c = combine_c(a_dd, b_dd, hash, dollar);
  return ReductionBundle{std::move(a_n),  std::move(b_n),  std::move(a_p), std::move(b_p),
                         std::move(a_dd), std::move(b_dd), std::move(c),   hash,
                         dollar};
}

ComparisonReport verify_reduction(const Pda& a, const Pda& b, std::size_t max_len,
                                  const Budget& budget) {
  const ReductionBundle bundle = build_reduction(a, b);
  const DpasSystem two = DpasSystem::uniform(bundle.c, 2, AcceptanceMode::EmptyStack);
  std::vector<Symbol> sigma = a.input_alphabet();
  for (Symbol x : b.input_alphabet()) append_unique(sigma, x);

  ComparisonReport report;
  for (Word& w : all_words(sigma, max_len)) {
    const auto lhs = udpas_accepts(two, transform_input(w, bundle.hash, bundle.dollar), budget).kind;
    const auto rhs = shuffle_member2(w, a, b, budget).kind;
    report.add(std::move(w), lhs, rhs);
  }
  return report;
}

}  // namespace pdas
