#pragma once

// Symbols, alphabets and symbol strings.
//
// A SymbolString stores one byte per symbol: the symbol's index in the
// declaring Alphabet. Alphabets therefore hold at most 255 tokens. The
// comparison operators implement the canonical shortlex order (length
// first, then lexicographic by declared token order), which is the order
// every result set in the library is reported in.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ogi/error.hpp"

namespace ogi {

using Symbol = std::uint8_t;

/// Textual form of the empty string in every I/O format.
inline constexpr std::string_view kEpsilonToken = "<eps>";

class SymbolString {
 public:
  SymbolString() = default;
  SymbolString(std::initializer_list<Symbol> symbols) {
    for (Symbol s : symbols) data_.push_back(static_cast<char>(s));
  }

  static SymbolString from_bytes(std::string bytes) {
    SymbolString s;
    s.data_ = std::move(bytes);
    return s;
  }

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  Symbol operator[](std::size_t i) const noexcept {
    return static_cast<Symbol>(data_[i]);
  }

  void push_back(Symbol s) { data_.push_back(static_cast<char>(s)); }
  void append(const SymbolString& other) { data_ += other.data_; }

  SymbolString substr(std::size_t pos, std::size_t count = std::string::npos) const {
    return from_bytes(data_.substr(pos, count));
  }

  SymbolString reversed() const {
    return from_bytes(std::string(data_.rbegin(), data_.rend()));
  }

  /// View over the symbol bytes, useful for cheap substring comparisons.
  std::string_view bytes() const noexcept { return data_; }

  friend SymbolString operator+(SymbolString lhs, const SymbolString& rhs) {
    lhs.data_ += rhs.data_;
    return lhs;
  }

  friend bool operator==(const SymbolString&, const SymbolString&) = default;

  // shortlex
  friend std::strong_ordering operator<=>(const SymbolString& a, const SymbolString& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

 private:
  std::string data_;
};

/// Concatenation of any number of strings.
inline SymbolString concat(std::initializer_list<std::reference_wrapper<const SymbolString>> parts) {
  std::string out;
  std::size_t total = 0;
  for (const SymbolString& p : parts) total += p.size();
  out.reserve(total);
  for (const SymbolString& p : parts) out += p.bytes();
  return SymbolString::from_bytes(std::move(out));
}

/// An ordered, interned set of symbol tokens. Copies share storage.
/// Two alphabets are equal iff they declare the same tokens in the same order.
class Alphabet {
 public:
  Alphabet() : data_(std::make_shared<Data>()) {}

  explicit Alphabet(std::vector<std::string> tokens) {
    auto data = std::make_shared<Data>();
    if (tokens.size() > 255) throw InvalidArgument("alphabet holds at most 255 tokens");
    for (auto& t : tokens) {
      if (t.empty() || t == kEpsilonToken || t == "->" || t.front() == '#' ||
          std::any_of(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); })) {
        throw InvalidArgument("invalid symbol token '" + t + "'");
      }
      if (!data->index.emplace(t, static_cast<Symbol>(data->tokens.size())).second) {
        throw InvalidArgument("duplicate symbol token '" + t + "'");
      }
      data->tokens.push_back(std::move(t));
    }
    data_ = std::move(data);
  }

  Alphabet(std::initializer_list<const char*> tokens)
      : Alphabet(std::vector<std::string>(tokens.begin(), tokens.end())) {}

  /// One symbol per character of `chars`, in order.
  static Alphabet of_chars(std::string_view chars) {
    std::vector<std::string> tokens;
    for (char c : chars) tokens.emplace_back(1, c);
    return Alphabet(std::move(tokens));
  }

  std::size_t size() const noexcept { return data_->tokens.size(); }
  const std::vector<std::string>& tokens() const noexcept { return data_->tokens; }
  const std::string& token(Symbol s) const { return data_->tokens.at(s); }

  std::optional<Symbol> find(std::string_view token) const {
    auto it = data_->index.find(std::string(token));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  Symbol symbol(std::string_view token) const {
    if (auto s = find(token)) return *s;
    throw InvalidArgument("symbol '" + std::string(token) + "' is not in the alphabet");
  }

  bool contains(const SymbolString& w) const noexcept {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] >= size()) return false;
    return true;
  }

  /// Parses whitespace-separated tokens; `<eps>` alone denotes the empty string.
  SymbolString parse(std::string_view text) const {
    std::istringstream in{std::string(text)};
    std::string tok;
    SymbolString out;
    std::size_t count = 0;
    bool saw_eps = false;
    while (in >> tok) {
      ++count;
      if (tok == kEpsilonToken) {
        saw_eps = true;
        continue;
      }
      out.push_back(symbol(tok));
    }
    if (count == 0) throw InvalidArgument("empty string must be written as <eps>");
    if (saw_eps && count != 1) throw InvalidArgument("<eps> cannot be combined with symbols");
    return out;
  }

  /// Each character of `word` is one symbol token.
  SymbolString parse_chars(std::string_view word) const {
    if (word == kEpsilonToken) return {};
    SymbolString out;
    for (char c : word) out.push_back(symbol(std::string_view(&c, 1)));
    return out;
  }

  std::string format(const SymbolString& w) const {
    if (w.empty()) return std::string(kEpsilonToken);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += token(w[i]);
    }
    return out;
  }

  /// Concatenated tokens without separators; handy for single-character alphabets.
  std::string compact(const SymbolString& w) const {
    if (w.empty()) return "ε";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += token(w[i]);
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.data_ == b.data_ || a.data_->tokens == b.data_->tokens;
  }

 private:
  struct Data {
    std::vector<std::string> tokens;
    std::unordered_map<std::string, Symbol> index;
  };
  std::shared_ptr<const Data> data_;
};

inline void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw AlphabetMismatch();
}

}  // namespace ogi

template <>
struct std::hash<ogi::SymbolString> {
  std::size_t operator()(const ogi::SymbolString& s) const noexcept {
    return std::hash<std::string_view>{}(s.bytes());
  }
};
