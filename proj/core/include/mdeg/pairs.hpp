#ifndef MDEG_PAIRS_HPP
#define MDEG_PAIRS_HPP

#include <cstdint>

#include "mdeg/bracket.hpp"
#include "mdeg/polynomial.hpp"

namespace mdeg {

/// For homogeneous nonzero a, b decides a in C[b], i.e. a == c * b^m for a
/// scalar c and m >= 0. Homogeneity makes the monomial form the only
/// possibility, so the check reduces to one exact power comparison.
bool homogeneous_in_algebra(const Polynomial& a, const Polynomial& b);

/// Flags of the *-reduced conditions for a pair (f, g):
///   (1) f, g algebraically independent,
///   (2) top(f), top(g) algebraically dependent,
///   (3) top(f) not in C[top(g)] and top(g) not in C[top(f)].
/// star_reduced requires all three; remark_pair only (1) and (3), which is
/// all the degree lower bound needs.
struct StarReducedReport {
  bool independent = false;
  bool tops_dependent = false;
  bool f_top_not_in_g_top_algebra = false;
  bool g_top_not_in_f_top_algebra = false;
  bool star_reduced = false;
  bool remark_pair = false;
};

StarReducedReport star_reduced(const Polynomial& f, const Polynomial& g);

/// Inputs of the degree lower bound for G(f, g): writing
/// deg_y G = p*q + r with 0 <= r < p and p = deg f / gcd(deg f, deg g),
///   deg G(f, g) >= q*(p*deg g - deg f - deg g + deg[f,g]) + r*deg g.
/// f is the polynomial whose degree defines p; callers order accordingly.
struct SUQuery {
  i64 deg_f = 0;
  i64 deg_g = 0;
  i64 p = 0;
  i64 q = 0;
  i64 r = 0;
  i64 bracket_deg = 0;

  /// Computes p and the unique (q, r) decomposition of deg_y and validates
  /// every field.
  static SUQuery make(i64 deg_f, i64 deg_g, i64 deg_y, i64 bracket_deg);
};

i64 su_lower_bound(const SUQuery& query);

struct SUCheckReport {
  Degree lhs;  // deg G(f, g)
  i64 rhs = 0;
  bool holds = false;
  SUQuery query;
};

/// Evaluates both sides of the bound for a concrete remark pair (f, g) and a
/// bivariate G, with the exact bracket degree. Rejects pairs that are not
/// remark pairs instead of silently reporting on them.
SUCheckReport check_su_inequality(const Polynomial& f, const Polynomial& g,
                                  const Polynomial& G);

/// Observational probe of the bracket-degree conjecture
///   deg [f,g] > min(deg f, deg g)
/// under its decidable hypotheses: independence, dependent tops, and mutually
/// non-dividing degrees. The integral-closure hypothesis is not decided here,
/// so the probe never claims a counterexample either way.
struct YuProbeReport {
  bool independent = false;
  bool tops_dependent = false;
  bool degrees_nondivisible = false;
  bool decidable_hypotheses_met = false;
  bool integral_closure_checked = false;  // always false; recorded explicitly
  Degree bracket_degree;
  Degree min_degree;
  bool exceeds = false;
};

YuProbeReport yu_probe(const Polynomial& f, const Polynomial& g);

}  // namespace mdeg

#endif  // MDEG_PAIRS_HPP
