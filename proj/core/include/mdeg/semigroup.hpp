#ifndef MDEG_SEMIGROUP_HPP
#define MDEG_SEMIGROUP_HPP

#include <cstdint>
#include <optional>

#include "mdeg/degree.hpp"

namespace mdeg {

/// Coefficient convention for two-generator representations i*m + j*M.
/// NonNegative admits i, j >= 0 with (i, j) != (0, 0); Positive demands
/// i, j >= 1. NonNegative is the canonical reading used by the membership
/// lemma and the classifier; Positive is retained for auditing.
enum class CoeffMode { Positive, NonNegative };

struct Representation {
  i64 i = 0;
  i64 j = 0;
  i64 target = 0;
  i64 m = 0;  // first generator
  i64 M = 0;  // second generator

  bool valid() const {
    return i >= 0 && j >= 0 && !(i == 0 && j == 0) && i * m + j * M == target;
  }
};

/// Exhaustive search for target = i*m + j*M under the given mode, scanning
/// j = 0, 1, ..., target/M and returning the representation with the
/// smallest j, or nothing.
std::optional<Representation> member(i64 target, i64 m, i64 M, CoeffMode mode);

/// The arithmetic-progression membership equivalence:
///   a | 2d  <=>  a | d  or  a+2d in aN0 + (a+d)N0 (nonzero combination).
struct Lemma31Report {
  bool lhs = false;  // a | 2d
  bool rhs = false;  // a | d, or a+2d representable
  bool equal = false;
};

Lemma31Report lemma31_check(i64 a, i64 d);

}  // namespace mdeg

#endif  // MDEG_SEMIGROUP_HPP
