#ifndef MDEG_EXCLUSION_HPP
#define MDEG_EXCLUSION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdeg/semigroup.hpp"

namespace mdeg {

/// One elementary-reduction position of a hypothetical automorphism: the
/// component of degree `target` would have to equal g(F_u, F_v) where the
/// generators have degrees gen_small <= gen_large. bracket_lb is a lower
/// bound on deg[F_u, F_v]; strict marks it as a strict bound, which shifts
/// the q-coefficient by one.
struct PositionQuery {
  i64 target = 0;
  i64 gen_small = 0;
  i64 gen_large = 0;
  i64 bracket_lb = 2;
  bool strict = false;
};

struct QRForm {
  i64 q = 0;
  i64 r = 0;
  friend bool operator==(const QRForm&, const QRForm&) = default;
};

/// All (q, r) with q >= 0, 0 <= r < p surviving
///   q*(p*M - m - M + B) + r*M <= T,  p = m / gcd(m, M)
/// (B+1 in place of B when strict). Throws std::domain_error when the
/// q-coefficient is non-positive, since then the enumeration is unbounded
/// and the degree argument is inapplicable. The q-coefficient is positive
/// whenever p >= 2, because B >= 2 and M >= m.
std::vector<QRForm> feasible_qr(const PositionQuery& query);

/// Outcome of the contradiction pattern at one position: if every surviving
/// form has q = 0 and deg_y g = r <= r_max, then deg g(F_u, F_v) lies in
/// {i*m + j*M : i >= 0, 0 <= j <= r_max, (i,j) != (0,0)}; the position is
/// excluded when the target degree is not representable that way.
struct ExclusionReport {
  i64 p = 0;
  bool applicable = true;  // false when the q-enumeration is unbounded
  std::vector<QRForm> feasible;
  i64 r_max = -1;
  std::vector<i64> representable;  // ascending, clipped to [1, target]
  bool excluded = false;
  std::string trace;
};

ExclusionReport exclude_position(const PositionQuery& query);

struct PairBound {
  i64 value = 2;
  bool strict = false;
};

/// Bracket-degree lower bounds per component pair of a 3-component map.
struct BoundMap {
  PairBound b12;
  PairBound b13;
  PairBound b23;

  const PairBound& for_pair(int i, int j) const;
  PairBound& for_pair(int i, int j);
};

struct ExclusionSummary {
  std::array<i64, 3> triple{};
  std::array<ExclusionReport, 3> positions;  // index t-1 targets component t
  bool all_excluded = false;
};

/// Runs the three per-position exclusions for a sorted degree triple.
/// all_excluded means no elementary reduction is degree-compatible at any
/// position under the supplied bracket bounds.
ExclusionSummary exclude_all(const std::array<i64, 3>& sorted_triple,
                             const BoundMap& bounds = {});

/// The two integer systems characterizing the degree shape of a type-III
/// reduction; n is the witness parameter. System 2 (with the tight first
/// component) is reported when both match.
struct TypeIIIWitness {
  int system = 0;  // 1 or 2
  i64 n = 0;
};

std::optional<TypeIIIWitness> type_iii_possible(const std::array<i64, 3>& sorted_triple);

}  // namespace mdeg

#endif  // MDEG_EXCLUSION_HPP
