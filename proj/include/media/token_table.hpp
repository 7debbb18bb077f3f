#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "media/types.hpp"

namespace media {

/// Token identities with a fixed-point-free reverse involution.
///
/// Tokens are grouped into reverse pairs. Pair p is identified by the lower of
/// its two token indices; pairs are numbered in ascending order of that lower
/// index. Labels are optional metadata (an empty string means "no label").
class TokenTable {
 public:
  TokenTable() = default;

  explicit TokenTable(std::vector<Token> reverse, std::vector<std::string> labels = {})
      : reverse_(std::move(reverse)), labels_(std::move(labels)) {
    const auto count = reverse_.size();
    if (!labels_.empty() && labels_.size() != count)
      throw Error("token table: label count does not match token count");
    if (labels_.empty()) labels_.resize(count);

    for (Token t = 0; t < count; ++t) {
      const Token r = reverse_[t];
      if (r >= count) throw Error("token table: reverse of token " + std::to_string(t) + " out of range");
      if (r == t) throw Error("token table: token " + std::to_string(t) + " is its own reverse");
      if (reverse_[r] != t)
        throw Error("token table: reverse map is not an involution at token " + std::to_string(t));
    }

    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels_) {
      if (label.empty()) continue;
      if (!seen.insert(label).second) throw Error("token table: duplicate label '" + label + "'");
    }

    pairOf_.assign(count, 0);
    for (Token t = 0; t < count; ++t) {
      if (t < reverse_[t]) {
        pairOf_[t] = pairOf_[reverse_[t]] = static_cast<std::uint32_t>(pairLow_.size());
        pairLow_.push_back(t);
      }
    }
  }

  /// Builds 2k tokens where token 2p and 2p+1 are mutual reverses.
  static TokenTable paired(std::size_t pairs, std::vector<std::string> labels = {}) {
    std::vector<Token> reverse(2 * pairs);
    for (Token t = 0; t < reverse.size(); ++t) reverse[t] = t ^ 1u;
    return TokenTable(std::move(reverse), std::move(labels));
  }

  std::size_t size() const { return reverse_.size(); }
  std::size_t pairCount() const { return pairLow_.size(); }

  Token reverse(Token t) const { return reverse_.at(t); }
  std::size_t pairOf(Token t) const { return pairOf_.at(t); }
  Token pairLow(std::size_t pair) const { return pairLow_.at(pair); }

  const std::string& label(Token t) const { return labels_.at(t); }
  bool hasLabel(Token t) const { return !labels_.at(t).empty(); }

  /// Label when present, otherwise "#<index>".
  std::string name(Token t) const {
    return hasLabel(t) ? labels_[t] : "#" + std::to_string(t);
  }

  std::optional<Token> find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || label.empty()) return std::nullopt;
    return static_cast<Token>(it - labels_.begin());
  }

  const std::vector<Token>& reverseMap() const { return reverse_; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const TokenTable& a, const TokenTable& b) {
    return a.reverse_ == b.reverse_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<Token> reverse_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> pairOf_;
  std::vector<Token> pairLow_;
};

}  // namespace media
