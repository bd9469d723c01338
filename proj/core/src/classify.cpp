#include "mdeg/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mdeg {

APTriple APTriple::make(i64 a, i64 d) {
  if (a < 1) throw std::invalid_argument("APTriple: a must be >= 1");
  if (d < 0) throw std::invalid_argument("APTriple: d must be >= 0");
  APTriple t;
  t.a = a;
  t.d = d;
  t.b = std::gcd(a, d);
  t.a_bar = a / t.b;
  t.d_bar = d / t.b;
  t.triple = {a, a + d, a + 2 * d};
  return t;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::In: return "In";
    case Status::NotIn: return "NotIn";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::ApRepresentable: return "ap-representable";
    case Rule::ElementaryReductionExcluded: return "elementary-reduction-excluded";
    case Rule::ExceptionalFamily: return "exceptional-family";
    case Rule::KnownNonTame: return "known-nontame";
    case Rule::Divides: return "divides";
    case Rule::Representable: return "representable";
    case Rule::OutOfScope: return "out-of-scope";
  }
  return "?";
}

std::optional<std::pair<i64, i64>> exceptional_form(i64 a, i64 d) {
  if (a < 1 || d < 0) return std::nullopt;
  if (a % 4 != 0) return std::nullopt;
  if ((4 * d) % a != 0) return std::nullopt;
  const i64 j = 4 * d / a;
  if (j % 2 == 0) return std::nullopt;
  return std::make_pair(a / 4, j);
}

std::span<const std::array<i64, 3>> known_nontame_triples() {
  static constexpr std::array<std::array<i64, 3>, 2> facts = {{{3, 4, 5}, {4, 5, 6}}};
  return facts;
}

Verdict classify_ap_with_facts(i64 a, i64 d,
                               std::span<const std::array<i64, 3>> facts) {
  const APTriple ap = APTriple::make(a, d);
  Verdict v;
  v.triple = ap.triple;

  if ((2 * d) % a == 0) {
    // a | a+2d exactly when a | 2d, so a nonnegative representation of the
    // third degree always exists here.
    auto rep = member(a + 2 * d, a, a + d, CoeffMode::NonNegative);
    if (!rep) throw std::logic_error("classify_ap: representation missing for a | 2d");
    v.status = Status::In;
    v.rule = Rule::ApRepresentable;
    v.representation = *rep;
    std::ostringstream note;
    note << "a | 2d and " << a + 2 * d << " = " << rep->i << "*" << a << " + " << rep->j
         << "*" << a + d;
    v.note = note.str();
    return v;
  }

  if (std::find(facts.begin(), facts.end(), ap.triple) != facts.end()) {
    v.status = Status::NotIn;
    v.rule = Rule::KnownNonTame;
    v.note = "settled by earlier work on this specific triple";
    return v;
  }

  if (auto ij = exceptional_form(a, d)) {
    v.status = Status::Unknown;
    v.rule = Rule::ExceptionalFamily;
    v.exceptional_ij = *ij;
    std::ostringstream note;
    note << "(4i, 4i+ij, 4i+2ij) with i=" << ij->first << ", j=" << ij->second
         << " (j odd): open";
    v.note = note.str();
    return v;
  }

  v.status = Status::NotIn;
  v.rule = Rule::ElementaryReductionExcluded;
  v.note = "a does not divide 2d: every position fails the degree bound and no "
           "type-III shape exists";
  return v;
}

Verdict classify_ap(i64 a, i64 d) {
  return classify_ap_with_facts(a, d, known_nontame_triples());
}

Verdict classify_triple(i64 d1, i64 d2, i64 d3) {
  if (d1 < 1 || d2 < 1 || d3 < 1)
    throw std::invalid_argument("classify_triple: degrees must be >= 1");
  std::array<i64, 3> t{d1, d2, d3};
  std::sort(t.begin(), t.end());

  Verdict v;
  v.triple = t;
  if (t[1] % t[0] == 0) {
    v.status = Status::In;
    v.rule = Rule::Divides;
    std::ostringstream note;
    note << t[0] << " divides " << t[1];
    v.note = note.str();
    return v;
  }
  if (auto rep = member(t[2], t[0], t[1], CoeffMode::NonNegative)) {
    v.status = Status::In;
    v.rule = Rule::Representable;
    v.representation = *rep;
    std::ostringstream note;
    note << t[2] << " = " << rep->i << "*" << t[0] << " + " << rep->j << "*" << t[1];
    v.note = note.str();
    return v;
  }
  if (t[1] - t[0] == t[2] - t[1]) return classify_ap(t[0], t[1] - t[0]);

  v.status = Status::Unknown;
  v.rule = Rule::OutOfScope;
  v.note = "not an arithmetic progression and no sufficient condition applies";
  return v;
}

std::vector<Verdict> corollary_sweep(CorollaryKind kind, i64 d1_max) {
  std::vector<Verdict> out;
  switch (kind) {
    case CorollaryKind::Consecutive:
      for (i64 d1 = 1; d1 <= d1_max; ++d1) out.push_back(classify_ap(d1, 1));
      break;
    case CorollaryKind::ConsecutiveOdd:
      for (i64 d1 = 1; d1 <= d1_max; d1 += 2) out.push_back(classify_ap(d1, 2));
      break;
    case CorollaryKind::ConsecutiveEven:
      for (i64 d1 = 2; d1 <= d1_max; d1 += 2) out.push_back(classify_ap(d1, 2));
      break;
  }
  return out;
}

}  // namespace mdeg
