#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace media {

/// Dense index of a state, 0..n-1.
using State = std::uint32_t;
/// Dense index of a token, 0..tau-1.
using Token = std::uint32_t;

/// A sequence of tokens applied left to right.
using Message = std::vector<Token>;

inline constexpr Token kNoToken = std::numeric_limits<Token>::max();
inline constexpr State kNoState = std::numeric_limits<State>::max();

/// Raised when a value does not satisfy the structural rules of its type
/// (non-involutive reverse map, invalid orientation, bad length function...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the black-box enumerator when the oracle cannot be a medium.
class BadMedium : public Error {
 public:
  using Error::Error;
};

}  // namespace media
