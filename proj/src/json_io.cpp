#include "pdas/json_io.hpp"

#include <fstream>
#include <set>

namespace pdas {

namespace {

class Reader {
 public:
  void issue(std::string field, std::string value, std::string message) {
    issues_.push_back({std::move(field), std::move(value), std::move(message)});
  }

  void only_fields(const json& obj, const std::string& where, std::set<std::string> allowed) {
    if (!obj.is_object()) {
      issue(where, obj.dump(), "expected an object");
      return;
    }
    for (const auto& [key, _] : obj.items())
      if (!allowed.count(key)) issue(where.empty() ? key : where + "." + key, key, "unknown field");
  }

  const json* field(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.is_object()) return nullptr;
    auto it = obj.find(key);
    if (it == obj.end()) {
      issue(qualify(where, key), "", "missing field");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> string(const json& obj, const std::string& where,
                                    const std::string& key) {
    const json* v = field(obj, where, key);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      issue(qualify(where, key), v->dump(), "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::vector<std::string> strings(const json& obj, const std::string& where,
                                   const std::string& key) {
    std::vector<std::string> out;
    const json* v = field(obj, where, key);
    if (!v) return out;
    if (!v->is_array()) {
      issue(qualify(where, key), v->dump(), "expected an array of strings");
      return out;
    }
    for (const auto& e : *v) {
      if (!e.is_string()) issue(qualify(where, key), e.dump(), "expected a string");
      else out.push_back(e.get<std::string>());
    }
    return out;
  }

  void finish() {
    if (!issues_.empty()) throw ValidationError(std::move(issues_));
  }

  static std::string qualify(const std::string& where, const std::string& key) {
    return where.empty() ? key : where + "." + key;
  }

 private:
  std::vector<ValidationIssue> issues_;
};

template <class N>
std::vector<N> names(const std::vector<std::string>& v) {
  std::vector<N> out;
  for (const auto& s : v) out.emplace_back(s);
  return out;
}

template <class N>
json names_json(const std::vector<N>& v) {
  json arr = json::array();
  for (N n : v) arr.push_back(n.name());
  return arr;
}

std::vector<Move> read_moves(Reader& r, const json& obj, const std::string& where) {
  std::vector<Move> out;
  const json* t = r.field(obj, where, "transitions");
  if (!t) return out;
  if (!t->is_array()) {
    r.issue(Reader::qualify(where, "transitions"), t->dump(), "expected an array");
    return out;
  }
  for (std::size_t i = 0; i < t->size(); ++i) {
    const json& m = (*t)[i];
    const std::string at = Reader::qualify(where, "transitions[" + std::to_string(i) + "]");
    r.only_fields(m, at, {"from", "input", "top", "to", "push"});
    auto from = r.string(m, at, "from");
    auto input = r.string(m, at, "input");
    auto top = r.string(m, at, "top");
    auto to = r.string(m, at, "to");
    auto push = r.strings(m, at, "push");
    if (!from || !input || !top || !to) continue;
    Move mv{State(*from), std::nullopt, Symbol(*top), State(*to), names<Symbol>(push)};
    if (!input->empty()) mv.input = Symbol(*input);
    out.push_back(std::move(mv));
  }
  return out;
}

json moves_json(const std::vector<Move>& moves) {
  json arr = json::array();
  for (const Move& m : moves)
    arr.push_back(json{{"from", m.from.name()},
                       {"input", m.input ? m.input->name() : ""},
                       {"top", m.top.name()},
                       {"to", m.to.name()},
                       {"push", names_json(m.push)}});
  return arr;
}

std::optional<AcceptanceMode> read_mode(Reader& r, const json& obj, const std::string& where,
                                        const std::string& key) {
  auto s = r.string(obj, where, key);
  if (!s) return std::nullopt;
  if (*s == "final") return AcceptanceMode::FinalState;
  if (*s == "empty") return AcceptanceMode::EmptyStack;
  r.issue(Reader::qualify(where, key), *s, "expected \"final\" or \"empty\"");
  return std::nullopt;
}

std::string mode_name(AcceptanceMode m) { return m == AcceptanceMode::FinalState ? "final" : "empty"; }

PdaSpec read_pda(Reader& r, const json& doc, const std::string& where) {
  r.only_fields(doc, where,
                {"states", "input_alphabet", "stack_alphabet", "transitions", "initial_state",
                 "bottom", "finals", "acceptance"});
  PdaSpec s;
  s.states = names<State>(r.strings(doc, where, "states"));
  s.input_alphabet = names<Symbol>(r.strings(doc, where, "input_alphabet"));
  s.stack_alphabet = names<Symbol>(r.strings(doc, where, "stack_alphabet"));
  s.moves = read_moves(r, doc, where);
  if (auto q = r.string(doc, where, "initial_state")) s.initial_state = State(*q);
  if (auto z = r.string(doc, where, "bottom")) s.bottom_symbol = Symbol(*z);
  s.final_states = names<State>(r.strings(doc, where, "finals"));
  if (auto m = read_mode(r, doc, where, "acceptance")) s.mode = *m;
  return s;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError({{path.string(), "", std::string("malformed JSON: ") + e.what()}});
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

Pda pda_from_json(const json& doc) {
  Reader r;
  PdaSpec s = read_pda(r, doc, "");
  r.finish();
  return Pda(std::move(s));
}

json to_json(const Pda& pda) {
  return json{{"states", names_json(pda.states())},
              {"input_alphabet", names_json(pda.input_alphabet())},
              {"stack_alphabet", names_json(pda.stack_alphabet())},
              {"transitions", moves_json(pda.moves())},
              {"initial_state", pda.initial_state().name()},
              {"bottom", pda.bottom_symbol().name()},
              {"finals", names_json(pda.final_states())},
              {"acceptance", mode_name(pda.mode())}};
}

PcpaSystem pcpa_from_json(const json& doc) {
  Reader r;
  r.only_fields(doc, "",
                {"degree", "input_alphabet", "stack_alphabet", "query_symbols", "response_symbol",
                 "acceptance_quantifier", "components", "contract"});
  PcpaSpec s;
  s.input_alphabet = names<Symbol>(r.strings(doc, "", "input_alphabet"));
  s.stack_alphabet = names<Symbol>(r.strings(doc, "", "stack_alphabet"));
  s.query_symbols = names<Symbol>(r.strings(doc, "", "query_symbols"));
  if (auto v = r.string(doc, "", "response_symbol")) s.response_symbol = Symbol(*v);
  if (auto q = r.string(doc, "", "acceptance_quantifier")) {
    if (*q == "all") s.quantifier = Quantifier::All;
    else if (*q == "some") s.quantifier = Quantifier::Some;
    else r.issue("acceptance_quantifier", *q, "expected \"all\" or \"some\"");
  }
  if (const json* comps = r.field(doc, "", "components")) {
    if (!comps->is_array()) {
      r.issue("components", comps->dump(), "expected an array");
    } else {
      for (std::size_t i = 0; i < comps->size(); ++i) {
        const json& c = (*comps)[i];
        const std::string at = "components[" + std::to_string(i) + "]";
        r.only_fields(c, at, {"states", "transitions", "initial_state", "bottom", "finals"});
        PcpaComponentSpec comp;
        comp.states = names<State>(r.strings(c, at, "states"));
        comp.moves = read_moves(r, c, at);
        if (auto q = r.string(c, at, "initial_state")) comp.initial_state = State(*q);
        if (auto z = r.string(c, at, "bottom")) comp.bottom_symbol = Symbol(*z);
        comp.final_states = names<State>(r.strings(c, at, "finals"));
        s.components.push_back(std::move(comp));
      }
    }
  }
  if (const json* d = r.field(doc, "", "degree")) {
    if (!d->is_number_unsigned() || d->get<std::size_t>() != s.components.size())
      r.issue("degree", d->dump(), "degree must equal the number of components");
  }
  r.finish();
  return PcpaSystem(std::move(s));
}

json to_json(const PcpaSystem& sys, const std::optional<std::string>& contract) {
  json comps = json::array();
  for (const auto& c : sys.spec().components)
    comps.push_back(json{{"states", names_json(c.states)},
                         {"transitions", moves_json(c.moves)},
                         {"initial_state", c.initial_state.name()},
                         {"bottom", c.bottom_symbol.name()},
                         {"finals", names_json(c.final_states)}});
  json doc{{"degree", sys.degree()},
           {"input_alphabet", names_json(sys.spec().input_alphabet)},
           {"stack_alphabet", names_json(sys.spec().stack_alphabet)},
           {"query_symbols", names_json(sys.query_symbols())},
           {"response_symbol", sys.response_symbol().name()},
           {"acceptance_quantifier", sys.quantifier() == Quantifier::All ? "all" : "some"},
           {"components", std::move(comps)}};
  if (contract) doc["contract"] = *contract;
  return doc;
}

json to_json(const CompiledSystem& compiled) { return to_json(compiled.system, compiled.contract); }

DpasSystem dpas_from_json(const json& doc) {
  Reader r;
  std::vector<PdaSpec> specs;
  std::optional<AcceptanceMode> mode;
  bool declared_uniform = false;
  if (doc.is_object() && doc.contains("component")) {
    r.only_fields(doc, "", {"component", "copies", "acceptance"});
    std::size_t copies = 0;
    if (const json* n = r.field(doc, "", "copies")) {
      if (!n->is_number_unsigned() || n->get<std::size_t>() == 0)
        r.issue("copies", n->dump(), "expected a positive integer");
      else
        copies = n->get<std::size_t>();
    }
    PdaSpec one = read_pda(r, doc["component"], "component");
    specs.assign(copies, one);
    declared_uniform = true;
  } else {
    r.only_fields(doc, "", {"components", "uniform", "acceptance"});
    if (const json* comps = r.field(doc, "", "components")) {
      if (!comps->is_array() || comps->empty())
        r.issue("components", comps->dump(), "expected a non-empty array");
      else
        for (std::size_t i = 0; i < comps->size(); ++i)
          specs.push_back(read_pda(r, (*comps)[i], "components[" + std::to_string(i) + "]"));
    }
    if (const json* u = r.field(doc, "", "uniform")) {
      if (!u->is_boolean()) r.issue("uniform", u->dump(), "expected a boolean");
      else declared_uniform = u->get<bool>();
    }
  }
  if (doc.is_object() && doc.contains("acceptance")) mode = read_mode(r, doc, "", "acceptance");
  r.finish();

  std::vector<Pda> comps;
  for (auto& s : specs) {
    if (mode) s.mode = *mode;
    comps.emplace_back(std::move(s));
  }
  const AcceptanceMode m = mode.value_or(comps.front().mode());
  DpasSystem sys(std::move(comps), m);
  if (declared_uniform && !sys.is_uniform())
    throw ValidationError({{"uniform", "true", "components are not identical"}});
  return sys;
}

json to_json(const DpasSystem& sys) {
  json comps = json::array();
  for (const Pda& c : sys.components()) comps.push_back(to_json(c));
  return json{{"components", std::move(comps)},
              {"uniform", sys.is_uniform()},
              {"acceptance", mode_name(sys.mode())}};
}

json to_json(const ReductionBundle& b) {
  return json{{"A", to_json(b.a)},
              {"B", to_json(b.b)},
              {"A_prime", to_json(b.a_prime)},
              {"B_prime", to_json(b.b_prime)},
              {"A_doubled", to_json(b.a_doubled)},
              {"B_doubled", to_json(b.b_doubled)},
              {"C", to_json(b.c)},
              {"transform", json{{"hash", b.hash.name()}, {"dollar", b.dollar.name()}}}};
}

std::string format_word(const Word& w) {
  const bool single = std::all_of(w.begin(), w.end(), [](Symbol s) {
    return word_from_chars(s.name()).size() == 1;
  });
  return to_string(w, single ? "" : " ");
}

json to_json(const ComparisonReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows)
    rows.push_back(json{{"word", format_word(row.word)},
                        {"lhs", std::string(to_string(row.lhs))},
                        {"rhs", std::string(to_string(row.rhs))},
                        {"status", std::string(to_string(row.status))}});
  return rows;
}

}  // namespace pdas
