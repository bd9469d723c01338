#include "mdeg/bracket.hpp"

#include <algorithm>
#include <vector>

namespace mdeg {

BracketValue bracket(const Polynomial& f, const Polynomial& g) {
  if (f.vars() != g.vars())
    throw std::invalid_argument("bracket: ambient dimension mismatch");
  const int n = f.vars();
  if (n < 2) throw std::invalid_argument("bracket: needs at least 2 variables");

  std::vector<Polynomial> pf, pg;
  pf.reserve(n);
  pg.reserve(n);
  for (int i = 1; i <= n; ++i) {
    pf.push_back(f.partial(i));
    pg.push_back(g.partial(i));
  }

  BracketValue out{{}, Degree::neg_inf()};
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Polynomial minor = pf[i - 1] * pg[j - 1] - pf[j - 1] * pg[i - 1];
      const Degree d = minor.total_degree();
      if (d.is_finite()) out.degree = std::max(out.degree, Degree(d.value() + 2));
      out.minors.emplace(std::make_pair(i, j), std::move(minor));
    }
  }
  return out;
}

bool alg_independent(const Polynomial& f, const Polynomial& g) {
  return !bracket(f, g).is_zero();
}

}  // namespace mdeg
