#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>

#include "ogi/alphabet.hpp"
#include "ogi/error.hpp"

namespace ogi {

/// Canonically ordered (shortlex) finite set of strings.
using StringSet = std::set<SymbolString>;

/// The finite set L ∩ Σ^{≤bound} of some language L.
class LangFragment {
 public:
  LangFragment(Alphabet alphabet, std::size_t bound, StringSet strings = {})
      : alphabet_(std::move(alphabet)), bound_(bound), strings_(std::move(strings)) {
    for (const auto& w : strings_) check(w);
  }

  /// Fragment whose bound is the length of its longest member.
  static LangFragment tight(Alphabet alphabet, StringSet strings) {
    std::size_t n = strings.empty() ? 0 : strings.rbegin()->size();
    return LangFragment(std::move(alphabet), n, std::move(strings));
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t bound() const noexcept { return bound_; }
  const StringSet& strings() const noexcept { return strings_; }
  std::size_t size() const noexcept { return strings_.size(); }
  bool empty() const noexcept { return strings_.empty(); }
  bool contains(const SymbolString& w) const { return strings_.count(w) != 0; }

  void insert(SymbolString w) {
    check(w);
    strings_.insert(std::move(w));
  }

  /// Same language cut down to a smaller bound.
  LangFragment truncated(std::size_t n) const {
    StringSet kept;
    for (const auto& w : strings_)
      if (w.size() <= n) kept.insert(w);
    return LangFragment(alphabet_, std::min(n, bound_), std::move(kept));
  }

  friend bool operator==(const LangFragment& a, const LangFragment& b) {
    return a.alphabet_ == b.alphabet_ && a.strings_ == b.strings_;
  }

 private:
  void check(const SymbolString& w) const {
    if (w.size() > bound_) {
      throw InvalidArgument("string of length " + std::to_string(w.size()) +
                            " exceeds fragment bound " + std::to_string(bound_));
    }
    if (!alphabet_.contains(w)) throw InvalidArgument("string uses symbols outside the alphabet");
  }

  Alphabet alphabet_;
  std::size_t bound_;
  StringSet strings_;
};

}  // namespace ogi
