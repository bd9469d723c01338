#ifndef MDEG_AUTOMORPHISM_HPP
#define MDEG_AUTOMORPHISM_HPP

#include <array>
#include <optional>
#include <vector>

#include "mdeg/polynomial.hpp"

namespace mdeg {

/// A polynomial map of affine n-space, with an optional tracked inverse.
/// Inverses are never computed from scratch: elementary maps know theirs and
/// composition chains them, so verify_inverse stays an exact identity check.
struct PolyMap {
  int n = 0;
  std::vector<Polynomial> components;
  std::optional<std::vector<Polynomial>> inverse;

  static PolyMap identity(int n);
};

/// The elementary map fixing every variable except `index`, which becomes
/// alpha * x_index + shift. The shift must not involve x_index and alpha
/// must be nonzero; the inverse is tracked as x_index -> (x_index - shift)/alpha.
PolyMap elementary(int n, int index, const Q& alpha, const Polynomial& shift);

/// (f o g)(x) = f(g(x)); the tracked inverse is g^-1 o f^-1 when both exist.
PolyMap compose(const PolyMap& f, const PolyMap& g);

std::vector<Degree> multidegree(const PolyMap& map);

bool verify_identity(const PolyMap& map);

/// True iff the tracked inverse exists and composes to the identity on both
/// sides.
bool verify_inverse(const PolyMap& map);

/// For d1 <= d2 <= d3 with d3 = i*d1 + j*d2 (i, j >= 0, not both zero)
/// returns the tame map
///   (x + z^d1, y + z^d2, z + (x + z^d1)^i * (y + z^d2)^j)
/// assembled from three elementary maps, with tracked inverse, choosing a
/// representation with minimal i+j. The multidegree is re-verified to be
/// exactly (d1, d2, d3) before returning. No representation -> nothing.
std::optional<PolyMap> build_witness(i64 d1, i64 d2, i64 d3);

struct ReductionCandidate {
  Polynomial g;            // bivariate: g(F_u, F_v)
  Degree residual_degree;  // deg(F_t - g(F_u, F_v)), strictly below deg F_t
};

/// Bounded search for an elementary reduction at component `position` of a
/// 3-component map: finds g supported on monomials of total degree <=
/// max_support_degree (default ceil(deg F_t / min generator degree) + 2)
/// with deg(F_t - g(F_u, F_v)) < deg F_t, by exact linear algebra on the
/// coefficients. Absence of a solution within the budget proves nothing.
std::optional<ReductionCandidate> reduction_search(
    const PolyMap& map, int position, std::optional<i64> max_support_degree = {});

/// The bracket-gap hypothesis on the pair (F_1, F_3): deg[F_1, F_3] > deg F_1.
/// When it holds, the strict bracket bound B = deg F_1 on that pair closes
/// the middle position of the exclusion analysis for the open family.
struct BracketGapReport {
  Degree bracket_13;
  Degree deg_f1;
  bool holds = false;
};

BracketGapReport bracket_gap_13(const PolyMap& map);

}  // namespace mdeg

#endif  // MDEG_AUTOMORPHISM_HPP
