#pragma once

// Interned identifiers for stack/input symbols and automaton states.
//
// Every distinct name is stored once in a process-wide table; a Name is a
// 32-bit handle into it. Equality and hashing use the handle, ordering uses the
// text so that anything sorted by Name is stable across runs.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pdas {

namespace detail {
std::uint32_t intern(std::string_view name);
const std::string& interned_name(std::uint32_t id);
}  // namespace detail

template <class Tag>
class Name {
 public:
  explicit Name(std::string_view text) : id_(detail::intern(text)) {}

  const std::string& name() const { return detail::interned_name(id_); }
  std::uint32_t id() const { return id_; }

  friend bool operator==(Name a, Name b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Name a, Name b) {
    if (a.id_ == b.id_) return std::strong_ordering::equal;
    return a.name().compare(b.name()) < 0 ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
  }
  friend std::ostream& operator<<(std::ostream& os, Name n) { return os << n.name(); }

 private:
  std::uint32_t id_;
};

struct SymbolTag {};
struct StateTag {};

using Symbol = Name<SymbolTag>;
using State = Name<StateTag>;

/// A word over some alphabet, first symbol first.
using Word = std::vector<Symbol>;

/// A pushdown store, topmost symbol first.
using Stack = std::vector<Symbol>;

inline Symbol sym(std::string_view s) { return Symbol(s); }
inline State st(std::string_view s) { return State(s); }

std::vector<Symbol> symbols(std::initializer_list<std::string_view> names);

/// Splits a bare string into one symbol per UTF-8 code point.
Word word_from_chars(std::string_view text);

/// Splits on ASCII whitespace; each token is one symbol.
Word word_from_tokens(std::string_view text);

/// Concatenates symbol names, separated by `sep`.
std::string to_string(const std::vector<Symbol>& w, std::string_view sep = "");

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_symbols(const std::vector<Symbol>& v) {
  std::size_t h = v.size();
  for (Symbol s : v) h = hash_combine(h, s.id());
  return h;
}

}  // namespace pdas

template <class Tag>
struct std::hash<pdas::Name<Tag>> {
  std::size_t operator()(pdas::Name<Tag> n) const noexcept { return n.id(); }
};
