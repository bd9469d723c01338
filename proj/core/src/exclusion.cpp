#include "mdeg/exclusion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mdeg {

namespace {

void validate(const PositionQuery& query) {
  if (query.target < 1 || query.gen_small < 1 || query.gen_large < 1)
    throw std::invalid_argument("PositionQuery: degrees must be >= 1");
  if (query.gen_small > query.gen_large)
    throw std::invalid_argument("PositionQuery: generators must be ordered");
  if (query.bracket_lb < 2)
    throw std::invalid_argument("PositionQuery: bracket lower bound must be >= 2");
}

i64 q_coefficient(const PositionQuery& query, i64 p) {
  const i64 effective_b = query.strict ? query.bracket_lb + 1 : query.bracket_lb;
  return p * query.gen_large - query.gen_small - query.gen_large + effective_b;
}

}  // namespace

std::vector<QRForm> feasible_qr(const PositionQuery& query) {
  validate(query);
  const i64 p = query.gen_small / std::gcd(query.gen_small, query.gen_large);
  const i64 coeff = q_coefficient(query, p);
  if (coeff <= 0)
    throw std::domain_error("feasible_qr: bound coefficient non-positive");
  std::vector<QRForm> forms;
  for (i64 q = 0; q * coeff <= query.target; ++q) {
    const i64 slack = query.target - q * coeff;
    const i64 r_cap = std::min(p - 1, slack / query.gen_large);
    for (i64 r = 0; r <= r_cap; ++r) forms.push_back({q, r});
  }
  return forms;
}

ExclusionReport exclude_position(const PositionQuery& query) {
  validate(query);
  ExclusionReport rep;
  rep.p = query.gen_small / std::gcd(query.gen_small, query.gen_large);
  std::ostringstream trace;
  trace << "p=" << rep.p << "; bound q*" << q_coefficient(query, rep.p) << "+r*"
        << query.gen_large << " <= " << query.target;

  try {
    rep.feasible = feasible_qr(query);
  } catch (const std::domain_error&) {
    rep.applicable = false;
    rep.excluded = false;
    trace << "; bound coefficient non-positive, enumeration unbounded -> inapplicable";
    rep.trace = trace.str();
    return rep;
  }

  for (const QRForm& form : rep.feasible) {
    if (form.q >= 1) {
      rep.excluded = false;
      trace << "; form (q=" << form.q << ", r=" << form.r
            << ") survives -> bound insufficient";
      rep.trace = trace.str();
      return rep;
    }
    rep.r_max = std::max(rep.r_max, form.r);
  }

  // Every survivor has q = 0, so g(F_u, F_v) = sum_j g_j(F_u) * F_v^j with
  // j <= r_max and its degree lies in {i*m + j*M}.
  std::set<i64> reachable;
  for (i64 j = 0; j <= rep.r_max; ++j) {
    for (i64 i = 0;; ++i) {
      if (i == 0 && j == 0) continue;
      const i64 v = i * query.gen_small + j * query.gen_large;
      if (v > query.target) break;
      reachable.insert(v);
    }
  }
  rep.representable.assign(reachable.begin(), reachable.end());
  rep.excluded = reachable.count(query.target) == 0;
  trace << "; survivors have q=0, r<=" << rep.r_max << "; reachable degrees in [1,"
        << query.target << "]: {";
  for (std::size_t k = 0; k < rep.representable.size(); ++k)
    trace << (k ? "," : "") << rep.representable[k];
  trace << "}; target " << (rep.excluded ? "not reachable -> excluded"
                                         : "reachable -> not excluded");
  rep.trace = trace.str();
  return rep;
}

const PairBound& BoundMap::for_pair(int i, int j) const {
  return const_cast<BoundMap*>(this)->for_pair(i, j);
}

PairBound& BoundMap::for_pair(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 2) return b12;
  if (i == 1 && j == 3) return b13;
  if (i == 2 && j == 3) return b23;
  throw std::out_of_range("BoundMap: pair indices must be in {1,2,3}");
}

ExclusionSummary exclude_all(const std::array<i64, 3>& sorted_triple,
                             const BoundMap& bounds) {
  if (!(sorted_triple[0] <= sorted_triple[1] && sorted_triple[1] <= sorted_triple[2]))
    throw std::invalid_argument("exclude_all: triple must be sorted ascending");
  if (sorted_triple[0] < 1)
    throw std::invalid_argument("exclude_all: degrees must be >= 1");

  ExclusionSummary summary;
  summary.triple = sorted_triple;
  // Target component t against the remaining pair (u, v), u < v.
  constexpr std::array<std::array<int, 3>, 3> layout = {{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}};
  summary.all_excluded = true;
  for (int t = 0; t < 3; ++t) {
    const auto [target_idx, u, v] = layout[t];
    const PairBound& bound = bounds.for_pair(u, v);
    PositionQuery query{sorted_triple[target_idx - 1], sorted_triple[u - 1],
                        sorted_triple[v - 1], bound.value, bound.strict};
    summary.positions[t] = exclude_position(query);
    summary.all_excluded = summary.all_excluded && summary.positions[t].excluded;
  }
  return summary;
}

std::optional<TypeIIIWitness> type_iii_possible(const std::array<i64, 3>& sorted_triple) {
  const auto [d1, d2, d3] = sorted_triple;
  if (!(1 <= d1 && d1 <= d2 && d2 <= d3))
    throw std::invalid_argument("type_iii_possible: triple must be sorted, entries >= 1");
  if (d2 % 2 != 0) return std::nullopt;  // both systems force d2 = 2n
  const i64 n = d2 / 2;
  // System 2: d1 = 3n/2 with n even, 5n/2 < d3 <= 3n.
  if (2 * d1 == 3 * n && n % 2 == 0 && 5 * n < 2 * d3 && d3 <= 3 * n)
    return TypeIIIWitness{2, n};
  // System 1: n < d1 <= 3n/2, d3 = 3n.
  if (n < d1 && 2 * d1 <= 3 * n && d3 == 3 * n) return TypeIIIWitness{1, n};
  return std::nullopt;
}

}  // namespace mdeg
