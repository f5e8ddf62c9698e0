#include "pdas/post.hpp"

#include <algorithm>
#include <sstream>

namespace pdas {

PostProgram::PostProgram(std::vector<Symbol> alphabet, std::vector<std::string> labels,
                         std::vector<post::Instruction> code)
    : alphabet_(std::move(alphabet)), labels_(std::move(labels)), code_(std::move(code)) {
  if (code_.empty()) throw std::invalid_argument("a Post program needs at least one instruction");
  if (labels_.size() != code_.size())
    throw std::invalid_argument("one label per instruction expected");
  const auto n = code_.size();
  const auto queue = queue_alphabet();
  for (const auto& ins : code_) {
    if (const auto* t = std::get_if<post::Test>(&ins)) {
      if (t->on_empty >= n) throw std::invalid_argument("TEST target out of range");
      for (Symbol s : queue)
        if (!t->cases.count(s)) throw std::invalid_argument("incomplete case map");
      for (const auto& [s, target] : t->cases)
        if (target >= n) throw std::invalid_argument("TEST target out of range");
    } else if (const auto* a = std::get_if<post::Assign>(&ins)) {
      if (a->next >= n) throw std::invalid_argument("ASSIGN target out of range");
      if (std::find(queue.begin(), queue.end(), a->symbol) == queue.end())
        throw std::invalid_argument("ASSIGN symbol '" + a->symbol.name() +
                                    "' outside the queue alphabet");
    }
  }
}

std::vector<Symbol> PostProgram::queue_alphabet() const {
  auto out = alphabet_;
  out.push_back(post_marker());
  return out;
}

std::optional<std::size_t> PostProgram::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

namespace {

std::string quoted(Symbol s) { return s == post_marker() ? "'#'" : s.name(); }

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '\'' && s.back() == '\'') return s.substr(1, s.size() - 2);
  return s;
}

struct RawLine {
  std::size_t line;
  std::string label;
  std::string kind;
  std::string rest;
};

}  // namespace

std::string PostProgram::to_source() const {
  std::ostringstream out;
  out << "alphabet:";
  for (Symbol a : alphabet_) out << ' ' << a.name();
  out << '\n';
  const auto queue = queue_alphabet();
  for (std::size_t i = 0; i < code_.size(); ++i) {
    out << labels_[i] << ": ";
    std::visit(
        [&](const auto& ins) {
          using T = std::decay_t<decltype(ins)>;
          if constexpr (std::is_same_v<T, post::Accept>) {
            out << "ACCEPT";
          } else if constexpr (std::is_same_v<T, post::Reject>) {
            out << "REJECT";
          } else if constexpr (std::is_same_v<T, post::Test>) {
            out << "TEST empty->" << labels_[ins.on_empty];
            for (Symbol s : queue) out << ", " << quoted(s) << "->" << labels_[ins.cases.at(s)];
          } else {
            out << "ASSIGN " << quoted(ins.symbol) << " -> " << labels_[ins.next];
          }
        },
        code_[i]);
    out << '\n';
  }
  return out.str();
}

PostProgram parse_post(std::string_view text) {
  std::vector<Symbol> alphabet;
  bool have_alphabet = false;
  std::vector<RawLine> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto c = line.find("//"); c != std::string_view::npos) line = line.substr(0, c);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw PostParseError(line_no, "expected 'LABEL: ...'");
    const auto head = trim(line.substr(0, colon));
    const auto body = trim(line.substr(colon + 1));

    if (!have_alphabet) {
      if (head != "alphabet") throw PostParseError(line_no, "first line must declare 'alphabet:'");
      for (auto tok : word_from_tokens(body)) {
        if (tok == post_marker() || tok.name() == "'#'")
          throw PostParseError(line_no, "'#' is the auxiliary symbol and cannot be declared");
        if (tok.name() == "empty") throw PostParseError(line_no, "'empty' is reserved");
        if (std::find(alphabet.begin(), alphabet.end(), tok) != alphabet.end())
          throw PostParseError(line_no, "duplicate alphabet symbol '" + tok.name() + "'");
        alphabet.push_back(tok);
      }
      have_alphabet = true;
      continue;
    }
    if (head.empty() || head.find_first_of(" \t") != std::string_view::npos)
      throw PostParseError(line_no, "bad label '" + std::string(head) + "'");
    const auto sp = body.find_first_of(" \t");
    raw.push_back(RawLine{line_no, std::string(head), std::string(body.substr(0, sp)),
                          std::string(sp == std::string_view::npos ? "" : trim(body.substr(sp)))});
  }
  if (!have_alphabet) throw PostParseError(line_no, "missing 'alphabet:' declaration");
  if (raw.empty()) throw PostParseError(line_no, "program has no instructions");

  std::vector<std::string> labels;
  for (const auto& r : raw) {
    if (std::find(labels.begin(), labels.end(), r.label) != labels.end())
      throw PostParseError(r.line, "duplicate label '" + r.label + "'");
    labels.push_back(r.label);
  }
  auto resolve = [&](std::size_t line, std::string_view target) {
    auto it = std::find(labels.begin(), labels.end(), target);
    if (it == labels.end())
      throw PostParseError(line, "jump to undefined label '" + std::string(target) + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<Symbol> queue = alphabet;
  queue.push_back(post_marker());
  auto queue_symbol = [&](std::size_t line, std::string_view tok) {
    Symbol s(unquote(tok));
    if (std::find(queue.begin(), queue.end(), s) == queue.end())
      throw PostParseError(line, "unknown symbol '" + std::string(tok) + "'");
    return s;
  };

  std::vector<post::Instruction> code;
  for (const auto& r : raw) {
    if (r.kind == "ACCEPT" || r.kind == "REJECT") {
      if (!r.rest.empty()) throw PostParseError(r.line, "unexpected text after " + r.kind);
      code.push_back(r.kind == "ACCEPT" ? post::Instruction{post::Accept{}}
                                        : post::Instruction{post::Reject{}});
    } else if (r.kind == "ASSIGN") {
      const auto arrow = r.rest.find("->");
      if (arrow == std::string::npos) throw PostParseError(r.line, "expected 'ASSIGN s -> L'");
      const auto s = queue_symbol(r.line, trim(std::string_view(r.rest).substr(0, arrow)));
      code.push_back(post::Assign{s, resolve(r.line, trim(std::string_view(r.rest).substr(arrow + 2)))});
    } else if (r.kind == "TEST") {
      std::optional<std::size_t> on_empty;
      std::unordered_map<Symbol, std::size_t> cases;
      for (auto item : split(r.rest, ',')) {
        const auto arrow = item.find("->");
        if (arrow == std::string_view::npos)
          throw PostParseError(r.line, "expected 'key->LABEL' in TEST");
        const auto key = trim(item.substr(0, arrow));
        const auto target = resolve(r.line, trim(item.substr(arrow + 2)));
        if (key == "empty") {
          if (on_empty) throw PostParseError(r.line, "duplicate 'empty' case");
          on_empty = target;
        } else {
          const auto s = queue_symbol(r.line, key);
          if (!cases.emplace(s, target).second)
            throw PostParseError(r.line, "duplicate case '" + std::string(key) + "'");
        }
      }
      if (!on_empty || cases.size() != queue.size())
        throw PostParseError(r.line, "incomplete case map");
      code.push_back(post::Test{*on_empty, std::move(cases)});
    } else {
      throw PostParseError(r.line, "unknown instruction '" + r.kind + "'");
    }
  }
  return PostProgram(std::move(alphabet), std::move(labels), std::move(code));
}

std::variant<PostState, PostHalt> post_step(const PostProgram& prog, const PostState& st) {
  const auto& ins = prog.at(st.label);
  if (std::holds_alternative<post::Accept>(ins)) return PostHalt::Accept;
  if (std::holds_alternative<post::Reject>(ins)) return PostHalt::Reject;
  PostState next = st;
  if (const auto* t = std::get_if<post::Test>(&ins)) {
    if (next.queue.empty()) {
      next.label = t->on_empty;
    } else {
      next.label = t->cases.at(next.queue.front());
      next.queue.pop_front();
    }
  } else {
    const auto& a = std::get<post::Assign>(ins);
    next.queue.push_back(a.symbol);
    next.label = a.next;
  }
  return next;
}

PostRun post_run(const PostProgram& prog, const Word& input, std::size_t max_steps) {
  for (Symbol s : input)
    if (std::find(prog.input_alphabet().begin(), prog.input_alphabet().end(), s) ==
        prog.input_alphabet().end())
      throw InputError("symbol '" + s.name() + "' is not in the program's input alphabet");

  PostRun run;
  run.trace.push_back(PostState{prog.entry(), std::deque<Symbol>(input.begin(), input.end())});
  while (true) {
    auto r = post_step(prog, run.trace.back());
    if (auto* halt = std::get_if<PostHalt>(&r)) {
      run.verdict = *halt == PostHalt::Accept ? VerdictKind::Accepted : VerdictKind::Rejected;
      return run;
    }
    if (run.steps >= max_steps) {
      run.verdict = VerdictKind::BudgetExhausted;
      return run;
    }
    ++run.steps;
    run.trace.push_back(std::get<PostState>(std::move(r)));
  }
}

}  // namespace pdas
