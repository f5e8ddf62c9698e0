#include "pdas/pcpa.hpp"

#include <algorithm>
#include <unordered_set>

#include "pdas/search.hpp"

namespace pdas {

std::vector<ValidationIssue> check_system(const PcpaSpec& spec) {
  std::vector<ValidationIssue> issues;
  auto report = [&](std::string field, const std::string& value, std::string msg) {
    issues.push_back({std::move(field), value, std::move(msg)});
  };

  const std::size_t k = spec.components.size();
  if (k == 0) report("components", "", "a system needs at least one component");
  if (spec.query_symbols.size() != k)
    report("query_symbols", std::to_string(spec.query_symbols.size()),
           "expected one query symbol per component (" + std::to_string(k) + ")");

  std::unordered_set<Symbol> stack(spec.stack_alphabet.begin(), spec.stack_alphabet.end());
  std::unordered_set<Symbol> queries;
  for (Symbol q : spec.query_symbols) {
    if (!queries.insert(q).second) report("query_symbols", q.name(), "duplicate query symbol");
    if (!stack.count(q)) report("query_symbols", q.name(), "query symbol not in stack alphabet");
  }
  const Symbol r = spec.response_symbol;
  if (queries.count(r)) report("response_symbol", r.name(), "response symbol is a query symbol");
  if (!stack.count(r)) report("response_symbol", r.name(), "response symbol not in stack alphabet");

  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = spec.components[i];
    const std::string prefix = "components[" + std::to_string(i) + "]";
    if (c.bottom_symbol == r)
      report(prefix + ".bottom", r.name(), "response symbol equals a bottom symbol");
    if (queries.count(c.bottom_symbol))
      report(prefix + ".bottom", c.bottom_symbol.name(), "bottom symbol is a query symbol");

    PdaSpec as_pda{c.states,        spec.input_alphabet, spec.stack_alphabet,
                   c.moves,         c.initial_state,     c.bottom_symbol,
                   c.final_states,  AcceptanceMode::FinalState};
    for (auto& issue : check_pda(as_pda)) {
      issue.field = prefix + "." + issue.field;
      issues.push_back(std::move(issue));
    }
    for (std::size_t m = 0; m < c.moves.size(); ++m) {
      const Symbol top = c.moves[m].top;
      if (top == r || queries.count(top))
        report(prefix + ".transitions[" + std::to_string(m) + "].top", top.name(),
               "internal move consumes a query/response symbol");
    }
  }
  return issues;
}

PcpaSystem::PcpaSystem(PcpaSpec spec) : spec_(std::move(spec)) {
  if (auto issues = check_system(spec_); !issues.empty()) throw ValidationError(std::move(issues));
  for (const auto& c : spec_.components)
    components_.emplace_back(PdaSpec{c.states, spec_.input_alphabet, spec_.stack_alphabet,
                                     c.moves, c.initial_state, c.bottom_symbol, c.final_states,
                                     AcceptanceMode::FinalState});
  for (std::size_t i = 0; i < components_.size(); ++i)
    for (const Move& m : components_[i].moves())
      if (std::any_of(m.push.begin(), m.push.end(),
                      [&](Symbol d) { return query_index(d).has_value(); })) {
        has_queries_ = true;
        if (i != 0) centralized_ = false;
      }
}

PcpaSystem validate_system(PcpaSpec spec) { return PcpaSystem(std::move(spec)); }

std::optional<std::size_t> PcpaSystem::query_index(Symbol d) const {
  const auto& q = spec_.query_symbols;
  auto it = std::find(q.begin(), q.end(), d);
  if (it == q.end()) return std::nullopt;
  return static_cast<std::size_t>(it - q.begin());
}

bool PcpaSystem::is_stall_symbol(Symbol d) const {
  return d == spec_.response_symbol || query_index(d).has_value();
}

PcpaSystem PcpaSystem::with_quantifier(Quantifier q) const {
  PcpaSystem copy = *this;
  copy.spec_.quantifier = q;
  return copy;
}

PcpaConfiguration initial_configuration(const PcpaSystem& sys) {
  PcpaConfiguration cfg;
  for (const Pda& c : sys.components()) cfg.parts.push_back(initial_config(c));
  return cfg;
}

std::vector<std::pair<std::size_t, std::size_t>> matched_pairs(const PcpaSystem& sys,
                                                               const PcpaConfiguration& cfg) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const Symbol r = sys.response_symbol();
  for (std::size_t i = 0; i < cfg.parts.size(); ++i) {
    const Stack& target = cfg.parts[i].stack;
    if (target.empty()) continue;
    auto j = sys.query_index(target.front());
    if (!j || *j == i || *j >= cfg.parts.size()) continue;
    const Stack& source = cfg.parts[*j].stack;
    if (!source.empty() && source.front() == r) out.emplace_back(i, *j);
  }
  return out;
}

namespace {

PcpaConfiguration communicate(const PcpaSystem& sys, const PcpaConfiguration& cfg,
                              std::size_t target, std::size_t source) {
  PcpaConfiguration next = cfg;
  const Stack& src = cfg.parts[source].stack;
  const Stack& tgt = cfg.parts[target].stack;
  Stack merged;
  merged.reserve(src.size() + tgt.size() - 2);
  merged.insert(merged.end(), src.begin() + 1, src.end());
  merged.insert(merged.end(), tgt.begin() + 1, tgt.end());
  next.parts[target].stack = std::move(merged);
  next.parts[source].stack = Stack{sys.component(source).bottom_symbol()};
  return next;
}

}  // namespace

std::vector<PcpaTransition> pcpa_step(const PcpaSystem& sys, const PcpaConfiguration& cfg,
                                      std::span<const Symbol> word, StepSemantics semantics) {
  std::vector<PcpaTransition> out;

  if (auto pairs = matched_pairs(sys, cfg); !pairs.empty()) {
    for (auto [i, j] : pairs) {
      PcpaStep step;
      step.kind = PcpaStep::Kind::Communication;
      step.target = i;
      step.source = j;
      out.push_back({std::move(step), communicate(sys, cfg, i, j)});
    }
    return out;
  }

  // Per-component choices; an empty optional means the component idles.
  const std::size_t k = cfg.parts.size();
  std::vector<std::vector<std::optional<std::size_t>>> choices(k);
  bool anyone_moves = false;
  for (std::size_t i = 0; i < k; ++i) {
    const PdaConfig& part = cfg.parts[i];
    if (part.stack.empty() || sys.is_stall_symbol(part.stack.front())) {
      choices[i].push_back(std::nullopt);
      continue;
    }
    auto moves = applicable_moves(sys.component(i), part, word);
    if (moves.empty()) {
      if (semantics == StepSemantics::Strict) return out;
      choices[i].push_back(std::nullopt);
      continue;
    }
    anyone_moves = true;
    for (std::size_t m : moves) choices[i].push_back(m);
  }
  if (!anyone_moves) return out;

  // Cartesian product, component 0 outermost.
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    PcpaStep step;
    step.moves.resize(k);
    PcpaConfiguration next = cfg;
    for (std::size_t i = 0; i < k; ++i) {
      step.moves[i] = choices[i][pick[i]];
      if (step.moves[i])
        next.parts[i] = apply_move(cfg.parts[i], sys.component(i).moves()[*step.moves[i]], word);
    }
    out.push_back({std::move(step), std::move(next)});

    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool is_accepting(const PcpaSystem& sys, const PcpaConfiguration& cfg, std::size_t word_length) {
  bool all = true, some = false;
  for (std::size_t i = 0; i < cfg.parts.size(); ++i) {
    if (cfg.parts[i].input_pos != word_length) return false;
    const bool fin = sys.component(i).is_final(cfg.parts[i].state);
    all = all && fin;
    some = some || fin;
  }
  return sys.quantifier() == Quantifier::All ? all : some;
}

void check_word(const PcpaSystem& sys, std::span<const Symbol> word) {
  const auto& v = sys.spec().input_alphabet;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (sys.is_stall_symbol(word[i]))
      throw InputError("input word contains query/response symbol '" + word[i].name() + "'");
    if (std::find(v.begin(), v.end(), word[i]) == v.end())
      throw InputError("symbol '" + word[i].name() + "' at position " + std::to_string(i) +
                       " is not in the input alphabet");
  }
}

Verdict<PcpaStep> pcpa_accepts(const PcpaSystem& sys, std::span<const Symbol> word,
                               const Budget& budget, StepSemantics semantics) {
  check_word(sys, word);
  auto successors = [&](const PcpaConfiguration& cfg) {
    std::vector<std::pair<PcpaStep, PcpaConfiguration>> out;
    for (auto& t : pcpa_step(sys, cfg, word, semantics))
      out.emplace_back(std::move(t.step), std::move(t.next));
    return out;
  };
  auto accepting = [&](const PcpaConfiguration& cfg) {
    return is_accepting(sys, cfg, word.size());
  };
  return breadth_first_search<PcpaConfiguration, PcpaStep, PcpaConfigurationHash>(
             {initial_configuration(sys)}, successors, accepting, budget)
      .verdict;
}

std::string_view to_string(TraceEnd e) {
  switch (e) {
    case TraceEnd::Accepted: return "accepted";
    case TraceEnd::Stuck: return "stuck";
    case TraceEnd::StepLimit: return "step-limit";
    case TraceEnd::Nondeterministic: return "nondeterministic";
  }
  return "?";
}

PcpaTrace run_trace(const PcpaSystem& sys, std::span<const Symbol> word, std::size_t max_steps,
                    StepSemantics semantics) {
  check_word(sys, word);
  PcpaTrace trace;
  trace.configurations.push_back(initial_configuration(sys));
  while (true) {
    const PcpaConfiguration& cur = trace.configurations.back();
    if (is_accepting(sys, cur, word.size())) {
      trace.end = TraceEnd::Accepted;
      return trace;
    }
    auto next = pcpa_step(sys, cur, word, semantics);
    if (next.empty()) {
      trace.end = TraceEnd::Stuck;
      return trace;
    }
    if (next.size() > 1) {
      trace.end = TraceEnd::Nondeterministic;
      trace.violation_at = trace.configurations.size() - 1;
      trace.branches = std::move(next);
      return trace;
    }
    if (trace.steps.size() >= max_steps) {
      trace.end = TraceEnd::StepLimit;
      return trace;
    }
    trace.steps.push_back(std::move(next.front().step));
    trace.configurations.push_back(std::move(next.front().next));
  }
}

}  // namespace pdas
