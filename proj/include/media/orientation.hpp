#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "media/token_table.hpp"

namespace media {

/// A choice of one positive token from every reverse pair.
class Orientation {
 public:
  Orientation() = default;

  Orientation(const TokenTable& tokens, std::vector<bool> positive) : positive_(std::move(positive)) {
    if (positive_.size() != tokens.size()) throw Error("orientation: sign count does not match token count");
    for (Token t = 0; t < tokens.size(); ++t)
      if (positive_[t] == positive_[tokens.reverse(t)])
        throw Error("orientation: token " + tokens.name(t) + " and its reverse have the same sign");
  }

  /// The lower-indexed token of each pair is positive. For media built from set
  /// families this is the natural (insertion-positive) orientation.
  static Orientation lowerPositive(const TokenTable& tokens) {
    std::vector<bool> positive(tokens.size());
    for (Token t = 0; t < tokens.size(); ++t) positive[t] = t < tokens.reverse(t);
    return Orientation(tokens, std::move(positive));
  }

  /// Positive set given explicitly; must hold exactly one token per pair.
  static Orientation fromPositiveSet(const TokenTable& tokens, std::span<const Token> positives) {
    std::vector<bool> positive(tokens.size(), false);
    for (Token t : positives) positive.at(t) = true;
    return Orientation(tokens, std::move(positive));
  }

  std::size_t size() const { return positive_.size(); }
  bool isPositive(Token t) const { return positive_.at(t); }
  const std::vector<bool>& signs() const { return positive_; }

  std::vector<Token> positiveTokens() const {
    std::vector<Token> out;
    for (Token t = 0; t < positive_.size(); ++t)
      if (positive_[t]) out.push_back(t);
    return out;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<bool> positive_;
};

/// Per-token real lengths with lambda(t) + lambda(reverse t) >= 0 (exact comparison).
class LengthFunction {
 public:
  LengthFunction() = default;

  LengthFunction(const TokenTable& tokens, std::vector<double> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.size() != tokens.size()) throw Error("length function: value count does not match token count");
    for (Token t = 0; t < tokens.size(); ++t)
      if (!(lengths_[t] + lengths_[tokens.reverse(t)] >= 0.0))
        throw Error("length function: lambda(" + tokens.name(t) + ") + lambda(" + tokens.name(tokens.reverse(t)) +
                    ") is negative");
  }

  static LengthFunction unit(const TokenTable& tokens) {
    return LengthFunction(tokens, std::vector<double>(tokens.size(), 1.0));
  }

  std::size_t size() const { return lengths_.size(); }
  double operator()(Token t) const { return lengths_.at(t); }
  const std::vector<double>& values() const { return lengths_; }

 private:
  std::vector<double> lengths_;
};

}  // namespace media
