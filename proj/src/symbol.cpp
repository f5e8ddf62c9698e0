#include "pdas/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace pdas {

namespace detail {
namespace {

struct InternTable {
  std::shared_mutex mutex;
  std::deque<std::string> names;  // deque keeps references stable
  std::unordered_map<std::string_view, std::uint32_t> ids;
};

InternTable& table() {
  static InternTable t;
  return t;
}

}  // namespace

std::uint32_t intern(std::string_view name) {
  auto& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (auto it = t.ids.find(name); it != t.ids.end()) return it->second;
  }
  std::unique_lock lock(t.mutex);
  if (auto it = t.ids.find(name); it != t.ids.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(t.names.back(), id);
  return id;
}

const std::string& interned_name(std::uint32_t id) {
  auto& t = table();
  std::shared_lock lock(t.mutex);
  return t.names.at(id);
}

}  // namespace detail

std::vector<Symbol> symbols(std::initializer_list<std::string_view> names) {
  std::vector<Symbol> out;
  out.reserve(names.size());
  for (auto n : names) out.emplace_back(n);
  return out;
}

Word word_from_chars(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0) len = 4;
    else if (lead >= 0xE0) len = 3;
    else if (lead >= 0xC0) len = 2;
    if (i + len > text.size()) throw std::invalid_argument("truncated UTF-8 sequence in word");
    w.emplace_back(text.substr(i, len));
    i += len;
  }
  return w;
}

Word word_from_tokens(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !space(text[j])) ++j;
    if (j > i) w.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return w;
}

std::string to_string(const std::vector<Symbol>& w, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += w[i].name();
  }
  return out;
}

}  // namespace pdas
