#ifndef MDEG_CLASSIFY_HPP
#define MDEG_CLASSIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdeg/semigroup.hpp"

namespace mdeg {

/// An arithmetic-progression degree triple (a, a+d, a+2d) with the gcd
/// bookkeeping b = gcd(a, d), a = b*a_bar, d = b*d_bar.
struct APTriple {
  i64 a = 0;
  i64 d = 0;
  i64 b = 0;
  i64 a_bar = 0;
  i64 d_bar = 0;
  std::array<i64, 3> triple{};

  static APTriple make(i64 a, i64 d);
};

enum class Status { In, NotIn, Unknown };

enum class Rule {
  ApRepresentable,              // a | 2d: the third degree is reachable from the first two
  ElementaryReductionExcluded,  // degree-bound case analysis plus type-III nullity
  ExceptionalFamily,            // (4i, 4i+ij, 4i+2ij) with j odd: left open
  KnownNonTame,                 // externally established non-realizable triple
  Divides,                      // d1 | d2 sufficient condition
  Representable,                // d3 = i*d1 + j*d2 sufficient condition
  OutOfScope,                   // non-AP triple outside the sufficient conditions
};

std::string status_name(Status s);
std::string rule_name(Rule r);

/// Classification outcome with a machine-readable justification: which rule
/// fired, plus its witness data when one exists.
struct Verdict {
  std::array<i64, 3> triple{};
  Status status = Status::Unknown;
  Rule rule = Rule::OutOfScope;
  std::optional<Representation> representation;      // In verdicts
  std::optional<std::pair<i64, i64>> exceptional_ij; // Unknown via the open family
  std::string note;
};

/// (i, j) with (a, a+d, a+2d) = (4i, 4i+ij, 4i+2ij) and j odd, if the
/// progression has that shape: 4 | a, a | 4d, 4d/a odd.
std::optional<std::pair<i64, i64>> exceptional_form(i64 a, i64 d);

/// Triples that earlier work settled and the degree argument alone cannot:
/// (3,4,5) and (4,5,6), both not realizable. (4,5,6) lies inside the
/// exceptional family, so without this table it would honestly come back
/// Unknown.
std::span<const std::array<i64, 3>> known_nontame_triples();

Verdict classify_ap(i64 a, i64 d);
/// Same, against a caller-supplied fact table (used to show the default
/// entries are load-bearing).
Verdict classify_ap_with_facts(i64 a, i64 d,
                               std::span<const std::array<i64, 3>> facts);

/// General triples: sorts, applies the sufficient conditions (d1 | d2 or
/// d3 = i*d1 + j*d2), then delegates arithmetic progressions; anything else
/// is out of scope for this tool.
Verdict classify_triple(i64 d1, i64 d2, i64 d3);

enum class CorollaryKind { Consecutive, ConsecutiveOdd, ConsecutiveEven };

/// Verdicts for the family (d1, d1+step, d1+2*step) with step 1 for
/// consecutive integers and 2 for consecutive odd / even numbers.
std::vector<Verdict> corollary_sweep(CorollaryKind kind, i64 d1_max);

}  // namespace mdeg

#endif  // MDEG_CLASSIFY_HPP
