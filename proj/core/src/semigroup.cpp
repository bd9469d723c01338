#include "mdeg/semigroup.hpp"

#include <stdexcept>

namespace mdeg {

std::optional<Representation> member(i64 target, i64 m, i64 M, CoeffMode mode) {
  if (target < 1 || m < 1 || M < 1)
    throw std::invalid_argument("member: target and generators must be >= 1");
  const i64 j_min = mode == CoeffMode::Positive ? 1 : 0;
  const i64 i_min = j_min;
  for (i64 j = j_min; j * M <= target; ++j) {
    const i64 rest = target - j * M;
    if (rest % m != 0) continue;
    const i64 i = rest / m;
    if (i < i_min) continue;
    if (i == 0 && j == 0) continue;
    Representation rep{i, j, target, m, M};
    if (!rep.valid()) throw std::logic_error("member: witness failed re-verification");
    return rep;
  }
  return std::nullopt;
}

Lemma31Report lemma31_check(i64 a, i64 d) {
  if (a < 1) throw std::invalid_argument("lemma31_check: a must be >= 1");
  if (d < 0) throw std::invalid_argument("lemma31_check: d must be >= 0");
  Lemma31Report rep;
  rep.lhs = (2 * d) % a == 0;
  rep.rhs = d % a == 0 || member(a + 2 * d, a, a + d, CoeffMode::NonNegative).has_value();
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace mdeg
