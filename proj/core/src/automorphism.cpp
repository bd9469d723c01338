#include "mdeg/automorphism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mdeg/bracket.hpp"
#include "mdeg/linear_solve.hpp"
#include "mdeg/semigroup.hpp"

namespace mdeg {

namespace {

std::vector<Polynomial> substitute_tuple(const std::vector<Polynomial>& outer,
                                         const std::vector<Polynomial>& args) {
  std::vector<Polynomial> out;
  out.reserve(outer.size());
  for (const auto& component : outer) out.push_back(component.substitute(args));
  return out;
}

}  // namespace

PolyMap PolyMap::identity(int n) {
  PolyMap map;
  map.n = n;
  for (int i = 1; i <= n; ++i) map.components.push_back(Polynomial::variable(n, i));
  map.inverse = map.components;
  return map;
}

PolyMap elementary(int n, int index, const Q& alpha, const Polynomial& shift) {
  if (index < 1 || index > n) throw std::out_of_range("elementary: index out of range");
  if (alpha == 0) throw std::invalid_argument("elementary: alpha must be nonzero");
  if (shift.vars() != n)
    throw std::invalid_argument("elementary: shift dimension mismatch");
  for (const auto& [mono, c] : shift.terms())
    if (mono.exps[index - 1] != 0)
      throw std::invalid_argument("elementary: shift must not involve the moved variable");

  PolyMap map = PolyMap::identity(n);
  const Polynomial xi = Polynomial::variable(n, index);
  map.components[index - 1] = alpha * xi + shift;
  (*map.inverse)[index - 1] = (Q(1) / alpha) * (xi - shift);
  return map;
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (f.n != g.n) throw std::invalid_argument("compose: dimension mismatch");
  PolyMap out;
  out.n = f.n;
  out.components = substitute_tuple(f.components, g.components);
  if (f.inverse && g.inverse)
    out.inverse = substitute_tuple(*g.inverse, *f.inverse);
  return out;
}

std::vector<Degree> multidegree(const PolyMap& map) {
  std::vector<Degree> out;
  out.reserve(map.components.size());
  for (const auto& component : map.components) out.push_back(component.total_degree());
  return out;
}

bool verify_identity(const PolyMap& map) {
  for (int i = 1; i <= map.n; ++i)
    if (map.components[i - 1] != Polynomial::variable(map.n, i)) return false;
  return true;
}

bool verify_inverse(const PolyMap& map) {
  if (!map.inverse) return false;
  PolyMap inv{map.n, *map.inverse, map.components};
  return verify_identity(compose(map, inv)) && verify_identity(compose(inv, map));
}

std::optional<PolyMap> build_witness(i64 d1, i64 d2, i64 d3) {
  if (!(1 <= d1 && d1 <= d2 && d2 <= d3))
    throw std::invalid_argument("build_witness: need 1 <= d1 <= d2 <= d3");

  // All representations d3 = i*d1 + j*d2; keep the flattest one so powers in
  // the third component stay small.
  std::optional<std::pair<i64, i64>> best;
  for (i64 j = 0; j * d2 <= d3; ++j) {
    const i64 rest = d3 - j * d2;
    if (rest % d1 != 0) continue;
    const i64 i = rest / d1;
    if (i == 0 && j == 0) continue;
    if (!best || i + j < best->first + best->second) best = {i, j};
  }
  if (!best) return std::nullopt;
  const auto [i, j] = *best;

  const Polynomial x = Polynomial::variable(3, 1);
  const Polynomial y = Polynomial::variable(3, 2);
  const Polynomial z = Polynomial::variable(3, 3);
  const PolyMap e1 = elementary(3, 1, Q(1), z.pow(static_cast<std::uint32_t>(d1)));
  const PolyMap e2 = elementary(3, 2, Q(1), z.pow(static_cast<std::uint32_t>(d2)));
  const PolyMap e3 = elementary(
      3, 3, Q(1),
      x.pow(static_cast<std::uint32_t>(i)) * y.pow(static_cast<std::uint32_t>(j)));
  PolyMap witness = compose(e3, compose(e2, e1));

  const auto mdeg = multidegree(witness);
  if (!(mdeg[0] == Degree(d1) && mdeg[1] == Degree(d2) && mdeg[2] == Degree(d3)))
    throw std::logic_error("build_witness: multidegree re-verification failed");
  return witness;
}

std::optional<ReductionCandidate> reduction_search(
    const PolyMap& map, int position, std::optional<i64> max_support_degree) {
  if (map.n != 3 || map.components.size() != 3)
    throw std::invalid_argument("reduction_search: map must have 3 components");
  if (position < 1 || position > 3)
    throw std::out_of_range("reduction_search: position out of range");

  const Polynomial& target = map.components[position - 1];
  const Degree target_deg = target.total_degree();
  if (!target_deg.is_finite()) return std::nullopt;
  const i64 t_value = target_deg.value();

  const int u = position == 1 ? 2 : 1;
  const int v = position == 3 ? 2 : 3;
  const Polynomial& fu = map.components[u - 1];
  const Polynomial& fv = map.components[v - 1];

  i64 budget;
  if (max_support_degree) {
    budget = *max_support_degree;
    if (budget < 0) throw std::invalid_argument("reduction_search: negative budget");
  } else {
    const Degree du = fu.total_degree();
    const Degree dv = fv.total_degree();
    if (!du.is_finite() || !dv.is_finite() || du.value() < 1 || dv.value() < 1)
      throw std::invalid_argument(
          "reduction_search: generators must have degree >= 1 for the default budget");
    const i64 m = std::min(du.value(), dv.value());
    budget = (t_value + m - 1) / m + 2;
  }

  // Unknowns: coefficients of g on monomials u^i v^j with i + j <= budget.
  std::vector<std::pair<i64, i64>> support;
  for (i64 total = 0; total <= budget; ++total)
    for (i64 i = 0; i <= total; ++i) support.emplace_back(i, total - i);

  std::vector<Polynomial> pow_u{Polynomial::constant(3, Q(1))};
  std::vector<Polynomial> pow_v{Polynomial::constant(3, Q(1))};
  for (i64 k = 1; k <= budget; ++k) {
    pow_u.push_back(pow_u.back() * fu);
    pow_v.push_back(pow_v.back() * fv);
  }

  std::vector<Polynomial> products;
  products.reserve(support.size());
  for (const auto& [i, jj] : support) products.push_back(pow_u[i] * pow_v[jj]);

  // Rows: every monomial of total degree >= deg F_t occurring anywhere.
  std::set<Monomial, GrlexLess> high;
  auto collect = [&](const Polynomial& p) {
    for (const auto& [mono, c] : p.terms())
      if (mono.total() >= t_value) high.insert(mono);
  };
  collect(target);
  for (const auto& p : products) collect(p);

  std::vector<std::vector<Q>> a;
  std::vector<Q> b;
  a.reserve(high.size());
  b.reserve(high.size());
  for (const auto& mono : high) {
    std::vector<Q> row;
    row.reserve(products.size());
    for (const auto& p : products) row.push_back(p.coeff(mono));
    a.push_back(std::move(row));
    b.push_back(target.coeff(mono));
  }

  const auto solution = solve_exact(std::move(a), std::move(b));
  if (!solution) return std::nullopt;

  Polynomial g(2);
  for (std::size_t k = 0; k < support.size(); ++k) {
    if ((*solution)[k] == 0) continue;
    Monomial mono{{static_cast<std::uint32_t>(support[k].first),
                   static_cast<std::uint32_t>(support[k].second)}};
    g += Polynomial::term(2, std::move(mono), (*solution)[k]);
  }
  if (g.is_zero()) return std::nullopt;

  const Polynomial residual = target - g.substitute(std::vector<Polynomial>{fu, fv});
  const Degree residual_deg = residual.total_degree();
  if (!(residual_deg < target_deg)) return std::nullopt;  // must lower strictly
  return ReductionCandidate{std::move(g), residual_deg};
}

BracketGapReport bracket_gap_13(const PolyMap& map) {
  if (map.n != 3 || map.components.size() != 3)
    throw std::invalid_argument("bracket_gap_13: map must have 3 components");
  BracketGapReport rep;
  rep.bracket_13 = bracket(map.components[0], map.components[2]).degree;
  rep.deg_f1 = map.components[0].total_degree();
  rep.holds = rep.bracket_13 > rep.deg_f1;
  return rep;
}

}  // namespace mdeg
