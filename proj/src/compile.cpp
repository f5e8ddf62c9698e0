#include "pdas/compile.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdas {

Word CompiledSystem::input_for(const Word& w) const {
  Word out(w.rbegin(), w.rend());
  if (mode == CompileMode::Endmarker) out.push_back(endmarker);
  return out;
}

namespace {

struct Names {
  Symbol z1, z2, cent, k1, k2, r, end;
};

class Builder {
 public:
  Builder(const PostProgram& prog, const CompilationOptions& opts)
      : prog_(prog),
        opts_(opts),
        n_{Symbol(opts.prefix + "Z1"), Symbol(opts.prefix + "Z2"), Symbol(opts.prefix + "¢"),
           Symbol(opts.prefix + "K1"), Symbol(opts.prefix + "K2"), Symbol(opts.prefix + "R"),
           Symbol(opts.prefix + "$")},
        queue_(prog.queue_alphabet()) {
    for (Symbol reserved : {n_.z1, n_.z2, n_.cent, n_.k1, n_.k2, n_.r, n_.end})
      if (std::find(queue_.begin(), queue_.end(), reserved) != queue_.end())
        throw std::invalid_argument("name collision with reserved symbol '" + reserved.name() +
                                    "'; choose a different prefix");
    plain_ = queue_;
    for (Symbol d : {n_.cent, n_.z1, n_.z2}) plain_.push_back(d);
  }

  CompiledSystem build() {
    PcpaSpec spec;
    spec.input_alphabet = prog_.input_alphabet();
    if (opts_.mode == CompileMode::Endmarker) spec.input_alphabet.push_back(n_.end);
    spec.stack_alphabet = plain_;
    for (Symbol d : {n_.k1, n_.k2, n_.r}) spec.stack_alphabet.push_back(d);
    spec.components = {component1(), component2()};
    spec.query_symbols = {n_.k1, n_.k2};
    spec.response_symbol = n_.r;
    spec.quantifier = Quantifier::All;

    const bool endmarker = opts_.mode == CompileMode::Endmarker;
    return CompiledSystem{PcpaSystem(std::move(spec)),
                          opts_.mode,
                          n_.end,
                          endmarker ? "accepts { reverse(w) " + n_.end.name() + " : w in L(M) }"
                                    : "accepts { reverse(w) : w in L(M) }",
                          n_.cent,
                          n_.z1,
                          n_.z2,
                          entries_,
                          boundary_};
  }

 private:
  State state(const std::string& s) const { return State(opts_.prefix + s); }

  State entry(std::size_t i) const {
    const auto& label = prog_.labels()[i];
    return std::visit(
        [&](const auto& ins) {
          using T = std::decay_t<decltype(ins)>;
          if constexpr (std::is_same_v<T, post::Accept>) return state("accept:" + label);
          else if constexpr (std::is_same_v<T, post::Reject>) return state("reject:" + label);
          else if constexpr (std::is_same_v<T, post::Test>) return state("test:" + label);
          else return state("enq:" + label);
        },
        prog_.at(i));
  }

  void add(std::vector<Move>& moves, Move m, bool boundary = false) {
    moves.push_back(std::move(m));
    boundary_.push_back(boundary);
  }

  PcpaComponentSpec component1() {
    PcpaComponentSpec c;
    c.bottom_symbol = n_.z1;
    const State init = state("init"), load = state("load");
    c.initial_state = init;
    c.states = {init, load};
    auto& mv = c.moves;

    add(mv, Move{init, std::nullopt, n_.z1, load, {n_.cent, n_.z1}});
    std::vector<Symbol> load_tops = prog_.input_alphabet();
    load_tops.push_back(n_.cent);
    for (Symbol t : load_tops) {
      for (Symbol a : prog_.input_alphabet()) add(mv, Move{load, a, t, load, {a, t}});
      if (opts_.mode == CompileMode::Endmarker)
        add(mv, Move{load, n_.end, t, entry(0), {t}}, true);
      else
        add(mv, Move{load, std::nullopt, t, entry(0), {t}}, true);
    }

    for (std::size_t i = 0; i < prog_.instructions().size(); ++i) {
      const auto& label = prog_.labels()[i];
      const State here = entry(i);
      entries_.push_back(here);
      c.states.push_back(here);
      const auto& ins = prog_.at(i);
      if (std::holds_alternative<post::Accept>(ins)) {
        c.final_states.push_back(here);
      } else if (const auto* t = std::get_if<post::Test>(&ins)) {
        const State wrapped = state("test:" + label + ":wrapped");
        const State rot = state("rot:" + label);
        c.states.push_back(wrapped);
        c.states.push_back(rot);
        for (State s : {here, wrapped}) {
          for (Symbol z : {n_.z1, n_.z2}) add(mv, Move{s, std::nullopt, z, s, {}});
          for (Symbol h : queue_) add(mv, Move{s, std::nullopt, h, entry(t->cases.at(h)), {}}, true);
        }
        add(mv, Move{here, std::nullopt, n_.cent, rot, {n_.r}});
        add(mv, Move{wrapped, std::nullopt, n_.cent, entry(t->on_empty), {n_.cent}}, true);
        add(mv, Move{rot, std::nullopt, n_.z1, wrapped, {n_.k2, n_.cent, n_.z1}});
      } else if (const auto* a = std::get_if<post::Assign>(&ins)) {
        const State wait = state("enq-wait:" + label);
        c.states.push_back(wait);
        for (Symbol d : plain_) add(mv, Move{here, std::nullopt, d, wait, {n_.r, d}});
        add(mv, Move{wait, std::nullopt, n_.z1, entry(a->next), {n_.k2, a->symbol, n_.z1}}, true);
      }
    }
    return c;
  }

  PcpaComponentSpec component2() const {
    PcpaComponentSpec c;
    const State read = state("read"), wait = state("wait"), sent = state("sent");
    c.states = {read, wait, sent};
    c.initial_state = read;
    c.bottom_symbol = n_.z2;
    c.final_states = c.states;
    for (Symbol a : prog_.input_alphabet()) c.moves.push_back(Move{read, a, n_.z2, read, {n_.z2}});
    if (opts_.mode == CompileMode::Endmarker)
      c.moves.push_back(Move{read, n_.end, n_.z2, wait, {n_.k1, n_.z2}});
    else
      c.moves.push_back(Move{read, std::nullopt, n_.z2, wait, {n_.k1, n_.z2}});
    for (Symbol d : plain_) c.moves.push_back(Move{wait, std::nullopt, d, sent, {n_.r, d}});
    c.moves.push_back(Move{sent, std::nullopt, n_.z2, wait, {n_.k1, n_.z2}});
    return c;
  }

  const PostProgram& prog_;
  const CompilationOptions& opts_;
  Names n_;
  std::vector<Symbol> queue_;  // Σ ∪ {#}
  std::vector<Symbol> plain_;  // every stack symbol an internal move may see on top
  std::vector<State> entries_;
  std::vector<bool> boundary_;
};

}  // namespace

CompiledSystem compile(const PostProgram& prog, const CompilationOptions& opts) {
  return Builder(prog, opts).build();
}

ComparisonReport verify_compilation(const PostProgram& prog, std::size_t max_len,
                                    const Budget& budget, const CompilationOptions& opts) {
  const CompiledSystem compiled = compile(prog, opts);
  ComparisonReport report;
  for (Word& w : all_words(prog.input_alphabet(), max_len)) {
    const auto lhs = post_run(prog, w, budget.max_steps).verdict;
    const auto rhs = pcpa_accepts(compiled.system, compiled.input_for(w), budget).kind;
    report.add(std::move(w), lhs, rhs);
  }
  return report;
}

}  // namespace pdas
