#include "mdeg/pairs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mdeg {

bool homogeneous_in_algebra(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("homogeneous_in_algebra: zero input");
  const i64 da = a.total_degree().value();
  const i64 db = b.total_degree().value();
  if (da == 0) return true;  // constants lie in every subalgebra
  if (db == 0) return false;
  if (da % db != 0) return false;
  const auto m = static_cast<std::uint32_t>(da / db);
  const Polynomial bm = b.pow(m);
  const Q c = a.leading_coeff() / bm.leading_coeff();
  return a == c * bm;
}

StarReducedReport star_reduced(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("star_reduced: zero input");
  if (f.vars() != g.vars())
    throw std::invalid_argument("star_reduced: ambient dimension mismatch");
  StarReducedReport rep;
  rep.independent = alg_independent(f, g);
  const Polynomial ft = f.top();
  const Polynomial gt = g.top();
  rep.tops_dependent = !alg_independent(ft, gt);
  rep.f_top_not_in_g_top_algebra = !homogeneous_in_algebra(ft, gt);
  rep.g_top_not_in_f_top_algebra = !homogeneous_in_algebra(gt, ft);
  rep.star_reduced = rep.independent && rep.tops_dependent &&
                     rep.f_top_not_in_g_top_algebra && rep.g_top_not_in_f_top_algebra;
  rep.remark_pair = rep.independent && rep.f_top_not_in_g_top_algebra &&
                    rep.g_top_not_in_f_top_algebra;
  return rep;
}

SUQuery SUQuery::make(i64 deg_f, i64 deg_g, i64 deg_y, i64 bracket_deg) {
  if (deg_f < 1 || deg_g < 1)
    throw std::invalid_argument("SUQuery: degrees must be >= 1");
  if (deg_y < 0) throw std::invalid_argument("SUQuery: deg_y must be >= 0");
  if (bracket_deg < 2) throw std::invalid_argument("SUQuery: bracket degree must be >= 2");
  SUQuery query;
  query.deg_f = deg_f;
  query.deg_g = deg_g;
  query.p = deg_f / std::gcd(deg_f, deg_g);
  query.q = deg_y / query.p;
  query.r = deg_y % query.p;
  query.bracket_deg = bracket_deg;
  return query;
}

i64 su_lower_bound(const SUQuery& query) {
  return query.q * (query.p * query.deg_g - query.deg_f - query.deg_g + query.bracket_deg) +
         query.r * query.deg_g;
}

SUCheckReport check_su_inequality(const Polynomial& f, const Polynomial& g,
                                  const Polynomial& G) {
  if (G.vars() != 2)
    throw std::invalid_argument("check_su_inequality: G must be bivariate");
  if (G.is_zero()) throw std::invalid_argument("check_su_inequality: G must be nonzero");
  const StarReducedReport pair = star_reduced(f, g);
  if (!pair.remark_pair)
    throw std::invalid_argument(
        "check_su_inequality: (f, g) is not a remark pair; the bound does not apply");

  const BracketValue br = bracket(f, g);
  SUCheckReport out;
  out.query = SUQuery::make(f.total_degree().value(), g.total_degree().value(),
                            G.degree_in(2), br.degree.value());
  out.rhs = su_lower_bound(out.query);
  out.lhs = G.substitute(std::vector<Polynomial>{f, g}).total_degree();
  out.holds = out.lhs >= Degree(out.rhs);
  return out;
}

namespace {
bool degree_divides(i64 a, i64 b) { return a == 0 ? b == 0 : b % a == 0; }
}  // namespace

YuProbeReport yu_probe(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("yu_probe: zero input");
  YuProbeReport rep;
  rep.independent = alg_independent(f, g);
  rep.tops_dependent = !alg_independent(f.top(), g.top());
  const i64 df = f.total_degree().value();
  const i64 dg = g.total_degree().value();
  rep.degrees_nondivisible = !degree_divides(df, dg) && !degree_divides(dg, df);
  rep.decidable_hypotheses_met =
      rep.independent && rep.tops_dependent && rep.degrees_nondivisible;
  rep.bracket_degree = bracket(f, g).degree;
  rep.min_degree = Degree(std::min(df, dg));
  rep.exceeds = rep.bracket_degree > rep.min_degree;
  return rep;
}

}  // namespace mdeg
