#include "pdas/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "pdas/compile.hpp"
#include "pdas/dpas.hpp"
#include "pdas/json_io.hpp"
#include "pdas/post.hpp"
#include "pdas/reduction.hpp"

namespace pdas::cli {

namespace {

struct Options {
  std::string file;
  std::string file_b;
  std::string word;
  bool symbols = false;
  bool witness = false;
  std::size_t max_configs = 100000;
  std::size_t max_steps = 100000;
  std::string json_path;
  std::string output;
  std::string quantifier;
  std::string step_semantics = "strict";
  std::string compile_mode = "endmarker";
  std::string prefix;
  std::size_t max_len = 4;
  bool allow_inconclusive = false;
  long long copies = -1;
  std::string acceptance;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Word parse_word(const Options& o) {
  return o.symbols ? word_from_tokens(o.word) : word_from_chars(o.word);
}

Budget budget_of(const Options& o) { return Budget(o.max_configs, o.max_steps); }

int exit_for(VerdictKind k) {
  switch (k) {
    case VerdictKind::Accepted: return kAccepted;
    case VerdictKind::Rejected: return kRejected;
    case VerdictKind::BudgetExhausted: return kInconclusive;
  }
  return kUsageError;
}

std::string stack_text(const Stack& s) { return s.empty() ? "ε" : to_string(s, " "); }

json stats_json(const SearchStats& s) {
  return json{{"configurations", s.configurations},
              {"expansions", s.expansions},
              {"depth", s.depth}};
}

json budget_json(const Options& o) {
  return json{{"max_configurations", o.max_configs}, {"max_steps", o.max_steps}};
}

/// Common report envelope: tool, version, command and resolved settings.
json envelope(const std::string& command, json config) {
  return json{{"tool", "workbench"},
              {"version", PDAS_VERSION},
              {"command", command},
              {"config", std::move(config)}};
}

void maybe_write(const Options& o, const json& doc) {
  if (!o.json_path.empty()) write_json_file(o.json_path, doc);
}

std::optional<AcceptanceMode> mode_option(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "empty") return AcceptanceMode::EmptyStack;
  if (s == "final") return AcceptanceMode::FinalState;
  throw UsageError("--mode must be 'empty' or 'final'");
}

Pda with_mode(const Pda& p, std::optional<AcceptanceMode> m) {
  if (!m || *m == p.mode()) return p;
  PdaSpec s = p.spec();
  s.mode = *m;
  return Pda(std::move(s));
}

// ---- pda ------------------------------------------------------------------

int pda_run(const Options& o, std::ostream& out) {
  const Pda pda = pda_from_json(read_json_file(o.file));
  const Word w = parse_word(o);
  const auto v = pda_accepts(pda, w, budget_of(o));
  out << to_string(v.kind) << " (" << v.stats.configurations << " configurations)\n";
  json doc = envelope("pda run", json{{"file", o.file}, {"word", format_word(w)},
                                      {"budget", budget_json(o)}});
  doc["verdict"] = to_string(v.kind);
  doc["stats"] = stats_json(v.stats);
  if (v.witness) {
    json steps = json::array();
    for (std::size_t i : *v.witness) {
      const Move& m = pda.moves()[i];
      std::ostringstream line;
      line << m.from << " --" << (m.input ? m.input->name() : "ε") << ", " << m.top << " / "
           << stack_text(m.push) << "--> " << m.to;
      if (o.witness) out << "  " << line.str() << '\n';
      steps.push_back(line.str());
    }
    doc["witness"] = steps;
  }
  maybe_write(o, doc);
  return exit_for(v.kind);
}

int pda_check_det(const Options& o, std::ostream& out) {
  const Pda pda = pda_from_json(read_json_file(o.file));
  const auto r = is_deterministic(pda);
  json doc = envelope("pda check-det", json{{"file", o.file}});
  doc["deterministic"] = r.deterministic;
  if (r.deterministic) {
    out << "deterministic\n";
  } else {
    const auto& c = *r.clash;
    out << "nondeterministic: moves " << c.first << " and " << c.second << " clash at state "
        << c.state << " with top " << c.top << '\n';
    doc["clash"] = json{{"state", c.state.name()}, {"top", c.top.name()},
                        {"moves", json::array({c.first, c.second})}};
  }
  maybe_write(o, doc);
  return r.deterministic ? kAccepted : kRejected;
}

int pda_to_empty(const Options& o, std::ostream& out) {
  const Pda pda = pda_from_json(read_json_file(o.file));
  const json converted = to_json(to_empty_stack(pda));
  if (o.output.empty()) out << converted.dump(2) << '\n';
  else write_json_file(o.output, converted);
  return kAccepted;
}

// ---- pcpa -----------------------------------------------------------------

PcpaSystem load_pcpa(const Options& o) {
  PcpaSystem sys = pcpa_from_json(read_json_file(o.file));
  if (o.quantifier == "all") return sys.with_quantifier(Quantifier::All);
  if (o.quantifier == "some") return sys.with_quantifier(Quantifier::Some);
  if (!o.quantifier.empty()) throw UsageError("--quantifier must be 'all' or 'some'");
  return sys;
}

StepSemantics semantics_of(const Options& o) {
  if (o.step_semantics == "strict") return StepSemantics::Strict;
  if (o.step_semantics == "relaxed") return StepSemantics::Relaxed;
  throw UsageError("--step-semantics must be 'strict' or 'relaxed'");
}

std::string config_text(const PcpaConfiguration& c) {
  std::string s;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i) s += " | ";
    const auto& p = c.parts[i];
    s += "[" + p.state.name() + " @" + std::to_string(p.input_pos) + " : " + stack_text(p.stack) + "]";
  }
  return s;
}

json pcpa_config(const Options& o, const PcpaSystem& sys, const Word& w) {
  return json{{"file", o.file},
              {"word", format_word(w)},
              {"quantifier", sys.quantifier() == Quantifier::All ? "all" : "some"},
              {"step_semantics", o.step_semantics},
              {"budget", budget_json(o)}};
}

int pcpa_run(const Options& o, std::ostream& out) {
  const PcpaSystem sys = load_pcpa(o);
  const Word w = parse_word(o);
  const auto v = pcpa_accepts(sys, w, budget_of(o), semantics_of(o));
  out << to_string(v.kind) << " (" << v.stats.configurations << " configurations)\n";
  json doc = envelope("pcpa run", pcpa_config(o, sys, w));
  doc["verdict"] = to_string(v.kind);
  doc["stats"] = stats_json(v.stats);
  maybe_write(o, doc);
  return exit_for(v.kind);
}

int pcpa_trace(const Options& o, std::ostream& out) {
  const PcpaSystem sys = load_pcpa(o);
  const Word w = parse_word(o);
  const auto t = run_trace(sys, w, o.max_steps, semantics_of(o));
  json lines = json::array();
  for (std::size_t i = 0; i < t.configurations.size(); ++i) {
    const std::string line = config_text(t.configurations[i]);
    out << i << ": " << line << '\n';
    lines.push_back(line);
  }
  out << to_string(t.end);
  if (t.violation_at) out << " at step " << *t.violation_at << " (" << t.branches.size() << " successors)";
  out << '\n';
  json doc = envelope("pcpa trace", pcpa_config(o, sys, w));
  doc["end"] = to_string(t.end);
  doc["trace"] = lines;
  if (t.violation_at) {
    json branches = json::array();
    for (const auto& b : t.branches) branches.push_back(config_text(b.next));
    doc["violation"] = json{{"step", *t.violation_at}, {"successors", branches}};
  }
  maybe_write(o, doc);
  switch (t.end) {
    case TraceEnd::Accepted: return kAccepted;
    case TraceEnd::Stuck: return kRejected;
    case TraceEnd::StepLimit: return kInconclusive;
    case TraceEnd::Nondeterministic: return kUsageError;
  }
  return kUsageError;
}

// ---- post -----------------------------------------------------------------

PostProgram load_post(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_post(buf.str());
}

CompilationOptions compile_options(const Options& o) {
  CompilationOptions c;
  if (o.compile_mode == "endmarker") c.mode = CompileMode::Endmarker;
  else if (o.compile_mode == "faithful") c.mode = CompileMode::Faithful;
  else throw UsageError("--mode must be 'endmarker' or 'faithful'");
  c.prefix = o.prefix;
  return c;
}

int post_run_cmd(const Options& o, std::ostream& out) {
  const PostProgram prog = load_post(o.file);
  const Word w = parse_word(o);
  const auto r = post_run(prog, w, o.max_steps);
  out << to_string(r.verdict) << " after " << r.steps << " steps\n";
  json doc = envelope("post run", json{{"file", o.file}, {"word", format_word(w)},
                                       {"max_steps", o.max_steps}});
  doc["verdict"] = to_string(r.verdict);
  doc["steps"] = r.steps;
  maybe_write(o, doc);
  return exit_for(r.verdict);
}

int post_compile(const Options& o, std::ostream& out) {
  const PostProgram prog = load_post(o.file);
  const CompiledSystem compiled = compile(prog, compile_options(o));
  const json doc = to_json(compiled);
  if (o.output.empty()) out << doc.dump(2) << '\n';
  else write_json_file(o.output, doc);
  return kAccepted;
}

int post_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const PostProgram prog = load_post(o.file);
  const auto report = verify_compilation(prog, o.max_len, budget_of(o), compile_options(o));
  out << report.agreements << "/" << report.rows.size() << " agree, " << report.disagreements
      << " disagree, " << report.inconclusive << " inconclusive\n";
  for (const auto& row : report.rows)
    if (row.status != Agreement::Agree)
      out << "  " << to_string(row.status) << ": '" << format_word(row.word)
          << "' post=" << to_string(row.lhs) << " pcpa=" << to_string(row.rhs) << '\n';
  json doc = envelope("post verify", json{{"file", o.file},
                                          {"mode", o.compile_mode},
                                          {"prefix", o.prefix},
                                          {"max_len", o.max_len},
                                          {"budget", budget_json(o)}});
  doc["results"] = to_json(report);
  maybe_write(o, doc);
  if (report.disagreements) return kRejected;
  if (report.inconclusive) {
    if (!o.allow_inconclusive) return kInconclusive;
    err << "warning: " << report.inconclusive << " inconclusive comparisons\n";
  }
  return kAccepted;
}

// ---- udpas ----------------------------------------------------------------

std::size_t copies_of(const Options& o) {
  if (o.copies < 1) throw UsageError("-n must be a positive number of copies");
  return static_cast<std::size_t>(o.copies);
}

int udpas_run(const Options& o, std::ostream& out) {
  const json doc_in = read_json_file(o.file);
  const auto mode = mode_option(o.acceptance);
  std::optional<DpasSystem> sys;
  if (doc_in.is_object() && (doc_in.contains("components") || doc_in.contains("component"))) {
    if (o.copies != -1) copies_of(o);
    sys.emplace(dpas_from_json(doc_in));
    if (mode && *mode != sys->mode()) {
      std::vector<Pda> comps;
      for (const Pda& c : sys->components()) comps.push_back(with_mode(c, mode));
      sys.emplace(std::move(comps), *mode);
    }
  } else {
    const Pda one = with_mode(pda_from_json(doc_in), mode);
    sys.emplace(DpasSystem::uniform(one, copies_of(o), one.mode()));
  }
  const Word w = parse_word(o);
  const auto v = udpas_accepts(*sys, w, budget_of(o));
  out << to_string(v.kind) << " (" << v.stats.configurations << " configurations)\n";
  json doc = envelope("udpas run", json{{"file", o.file},
                                        {"word", format_word(w)},
                                        {"components", sys->size()},
                                        {"acceptance", sys->mode() == AcceptanceMode::EmptyStack ? "empty" : "final"},
                                        {"budget", budget_json(o)}});
  doc["verdict"] = to_string(v.kind);
  doc["stats"] = stats_json(v.stats);
  maybe_write(o, doc);
  return exit_for(v.kind);
}

int udpas_member(const Options& o, std::ostream& out) {
  const std::size_t n = copies_of(o);
  const Pda one = with_mode(pda_from_json(read_json_file(o.file)), mode_option(o.acceptance));
  const Word w = parse_word(o);
  const auto r = udpas_member_np(one, n, w, budget_of(o));
  out << to_string(r.kind);
  json doc = envelope("udpas member-np", json{{"file", o.file},
                                              {"copies", n},
                                              {"word", format_word(w)},
                                              {"budget", budget_json(o)}});
  doc["verdict"] = to_string(r.kind);
  if (r.assignment) {
    std::string witness;
    json arr = json::array();
    for (std::size_t c : *r.assignment) {
      witness += std::to_string(c + 1);
      arr.push_back(c + 1);
    }
    out << " (assignment " << witness << ")";
    doc["assignment"] = arr;
  }
  out << '\n';
  maybe_write(o, doc);
  return exit_for(r.kind);
}

// ---- reduce ---------------------------------------------------------------

int reduce_build(const Options& o, std::ostream& out) {
  const Pda a = pda_from_json(read_json_file(o.file));
  const Pda b = pda_from_json(read_json_file(o.file_b));
  const json doc = to_json(build_reduction(a, b));
  if (o.output.empty()) out << doc.dump(2) << '\n';
  else write_json_file(o.output, doc);
  return kAccepted;
}

int reduce_transform(const Options& o, std::ostream& out) {
  const Word w = parse_word(o);
  out << format_word(transform_input(w, Symbol("#"), Symbol("$"))) << '\n';
  return kAccepted;
}

int reduce_verify(const Options& o, std::ostream& out) {
  const Pda a = pda_from_json(read_json_file(o.file));
  const Pda b = pda_from_json(read_json_file(o.file_b));
  const auto report = verify_reduction(a, b, o.max_len, budget_of(o));
  out << report.agreements << "/" << report.rows.size() << " agree, " << report.disagreements
      << " disagree, " << report.inconclusive << " inconclusive\n";
  for (const auto& row : report.rows)
    if (row.status != Agreement::Agree)
      out << "  " << to_string(row.status) << ": '" << format_word(row.word)
          << "' udpas=" << to_string(row.lhs) << " shuffle=" << to_string(row.rhs) << '\n';
  json doc = envelope("reduce verify", json{{"a", o.file},
                                            {"b", o.file_b},
                                            {"max_len", o.max_len},
                                            {"budget", budget_json(o)}});
  doc["results"] = to_json(report);
  maybe_write(o, doc);
  if (report.disagreements) return kRejected;
  return report.inconclusive ? kInconclusive : kAccepted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for pushdown automata systems", "workbench"};
  app.require_subcommand(1);
  Options o;

  auto add_budget = [&](CLI::App* c) {
    c->add_option("--max-configs", o.max_configs, "Configuration budget")->check(CLI::PositiveNumber);
    c->add_option("--max-steps", o.max_steps, "Step budget")->check(CLI::PositiveNumber);
  };
  auto add_word = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--word", o.word, "Input word (one symbol per character)");
    if (required) opt->required();
    c->add_flag("--symbols", o.symbols, "Treat --word as space-separated symbol names");
  };
  auto add_json = [&](CLI::App* c) {
    c->add_option("--json", o.json_path, "Write a machine-readable report");
  };

  auto* pda = app.add_subcommand("pda", "Single pushdown automata")->require_subcommand(1);
  auto* pda_run_c = pda->add_subcommand("run", "Membership test");
  pda_run_c->add_option("file", o.file)->required();
  add_word(pda_run_c, true);
  add_budget(pda_run_c);
  add_json(pda_run_c);
  pda_run_c->add_flag("--witness", o.witness, "Print the accepting move sequence");
  auto* pda_det = pda->add_subcommand("check-det", "Syntactic determinism check");
  pda_det->add_option("file", o.file)->required();
  add_json(pda_det);
  auto* pda_empty = pda->add_subcommand("to-empty-stack", "Convert to empty-stack acceptance");
  pda_empty->add_option("file", o.file)->required();
  pda_empty->add_option("-o,--output", o.output);

  auto* pcpa = app.add_subcommand("pcpa", "Parallel communicating PDA systems")->require_subcommand(1);
  std::vector<CLI::App*> pcpa_cmds{pcpa->add_subcommand("run", "Acceptance search"),
                                   pcpa->add_subcommand("trace", "Deterministic trace")};
  for (auto* c : pcpa_cmds) {
    c->add_option("file", o.file)->required();
    add_word(c, true);
    add_budget(c);
    add_json(c);
    c->add_option("--quantifier", o.quantifier, "all | some");
    c->add_option("--step-semantics", o.step_semantics, "strict | relaxed");
  }

  auto* post = app.add_subcommand("post", "Post machines")->require_subcommand(1);
  auto* post_run_c = post->add_subcommand("run", "Interpret a program");
  post_run_c->add_option("file", o.file)->required();
  add_word(post_run_c, true);
  post_run_c->add_option("--max-steps", o.max_steps)->check(CLI::PositiveNumber);
  add_json(post_run_c);
  auto* post_compile_c = post->add_subcommand("compile", "Compile to a degree-2 PCPA");
  post_compile_c->add_option("file", o.file)->required();
  post_compile_c->add_option("-o,--output", o.output);
  post_compile_c->add_option("--mode", o.compile_mode, "endmarker | faithful");
  post_compile_c->add_option("--prefix", o.prefix, "Prefix for generated names");
  auto* post_verify_c = post->add_subcommand("verify", "Differential check against the compiled PCPA");
  post_verify_c->add_option("file", o.file)->required();
  post_verify_c->add_option("--max-len", o.max_len);
  post_verify_c->add_option("--mode", o.compile_mode, "endmarker | faithful");
  post_verify_c->add_option("--prefix", o.prefix);
  post_verify_c->add_flag("--allow-inconclusive", o.allow_inconclusive);
  add_budget(post_verify_c);
  add_json(post_verify_c);

  auto* udpas = app.add_subcommand("udpas", "Distributed PDA systems")->require_subcommand(1);
  auto* udpas_run_c = udpas->add_subcommand("run", "Operational acceptance search");
  auto* udpas_np_c = udpas->add_subcommand("member-np", "Decomposition membership check");
  for (auto* c : {udpas_run_c, udpas_np_c}) {
    c->add_option("file", o.file)->required();
    c->add_option("-n,--copies", o.copies, "Number of copies");
    c->add_option("--mode", o.acceptance, "empty | final");
    add_word(c, true);
    add_budget(c);
    add_json(c);
  }

  auto* reduce = app.add_subcommand("reduce", "Shuffle-to-UDPAS reduction")->require_subcommand(1);
  auto* reduce_build_c = reduce->add_subcommand("build", "Build the reduction bundle");
  reduce_build_c->add_option("a", o.file)->required();
  reduce_build_c->add_option("b", o.file_b)->required();
  reduce_build_c->add_option("-o,--output", o.output);
  auto* reduce_transform_c = reduce->add_subcommand("transform", "Print the transformed input");
  add_word(reduce_transform_c, true);
  auto* reduce_verify_c = reduce->add_subcommand("verify", "Check the reduction on all short words");
  reduce_verify_c->add_option("a", o.file)->required();
  reduce_verify_c->add_option("b", o.file_b)->required();
  reduce_verify_c->add_option("--max-len", o.max_len);
  add_budget(reduce_verify_c);
  add_json(reduce_verify_c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kAccepted;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kAccepted;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (pda_run_c->parsed()) return pda_run(o, out);
    if (pda_det->parsed()) return pda_check_det(o, out);
    if (pda_empty->parsed()) return pda_to_empty(o, out);
    if (pcpa_cmds[0]->parsed()) return pcpa_run(o, out);
    if (pcpa_cmds[1]->parsed()) return pcpa_trace(o, out);
    if (post_run_c->parsed()) return post_run_cmd(o, out);
    if (post_compile_c->parsed()) return post_compile(o, out);
    if (post_verify_c->parsed()) return post_verify(o, out, err);
    if (udpas_run_c->parsed()) return udpas_run(o, out);
    if (udpas_np_c->parsed()) return udpas_member(o, out);
    if (reduce_build_c->parsed()) return reduce_build(o, out);
    if (reduce_transform_c->parsed()) return reduce_transform(o, out);
    if (reduce_verify_c->parsed()) return reduce_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace pdas::cli
