#ifndef MDEG_BRACKET_HPP
#define MDEG_BRACKET_HPP

#include <map>
#include <utility>

#include "mdeg/polynomial.hpp"

namespace mdeg {

/// Poisson bracket of two polynomials, stored as its 2x2 Jacobian minors
/// df/dxi*dg/dxj - df/dxj*dg/dxi for i < j. The formal degree-2 symbols
/// [xi,xj] are never materialized; they only shift the degree:
///   deg [f,g] = 2 + max over nonzero minors of their total degree,
/// and deg [f,g] = -infinity exactly when every minor vanishes, which
/// happens exactly when f and g are algebraically dependent.
struct BracketValue {
  std::map<std::pair<int, int>, Polynomial> minors;  // keys (i,j), 1-based, i<j
  Degree degree;

  bool is_zero() const { return !degree.is_finite(); }
};

BracketValue bracket(const Polynomial& f, const Polynomial& g);

/// True iff some Jacobian minor of (f, g) is nonzero.
bool alg_independent(const Polynomial& f, const Polynomial& g);

}  // namespace mdeg

#endif  // MDEG_BRACKET_HPP
