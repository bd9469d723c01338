#include "mdeg/polynomial.hpp"

#include <algorithm>

namespace mdeg {

int Polynomial::check_vars(int vars) {
  if (vars < 1) throw std::invalid_argument("Polynomial: variable count must be >= 1");
  return vars;
}

Polynomial Polynomial::constant(int vars, Q c) {
  Polynomial p(vars);
  if (c != 0) p.terms_.emplace(Monomial{std::vector<std::uint32_t>(vars, 0)}, std::move(c));
  return p;
}

Polynomial Polynomial::variable(int vars, int index) {
  check_vars(vars);
  if (index < 1 || index > vars)
    throw std::out_of_range("Polynomial::variable: index out of range");
  Monomial m{std::vector<std::uint32_t>(vars, 0)};
  m.exps[index - 1] = 1;
  return term(vars, std::move(m), Q(1));
}

Polynomial Polynomial::term(int vars, Monomial m, Q c) {
  Polynomial p(vars);
  if (m.exps.size() != static_cast<std::size_t>(vars))
    throw std::invalid_argument("Polynomial::term: exponent vector length mismatch");
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Degree Polynomial::total_degree() const {
  if (terms_.empty()) return Degree::neg_inf();
  return Degree(terms_.rbegin()->first.total());
}

Polynomial Polynomial::top() const {
  if (terms_.empty()) throw std::invalid_argument("top: zero polynomial has no top form");
  const auto d = terms_.rbegin()->first.total();
  Polynomial r(n_);
  for (auto it = terms_.rbegin(); it != terms_.rend() && it->first.total() == d; ++it)
    r.terms_.emplace(it->first, it->second);
  return r;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.total() == terms_.rbegin()->first.total();
}

Q Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Q(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::invalid_argument("leading_monomial: zero polynomial");
  return terms_.rbegin()->first;
}

const Q& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw std::invalid_argument("leading_coeff: zero polynomial");
  return terms_.rbegin()->second;
}

std::uint32_t Polynomial::degree_in(int index) const {
  if (index < 1 || index > n_) throw std::out_of_range("degree_in: index out of range");
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exps[index - 1]);
  return d;
}

void Polynomial::add_term(const Monomial& m, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_dim(const Polynomial& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("polynomial arithmetic: ambient dimension mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_dim(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_dim(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_dim(b);
  Polynomial r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Polynomial operator*(const Q& c, const Polynomial& p) {
  Polynomial r(p.n_);
  if (c == 0) return r;
  for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial acc = constant(n_, Q(1));
  for (std::uint32_t k = 0; k < e; ++k) acc = acc * *this;
  return acc;
}

Polynomial Polynomial::partial(int index) const {
  if (index < 1 || index > n_) throw std::out_of_range("partial: index out of range");
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m.exps[index - 1];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exps[index - 1] = e - 1;
    r.add_term(dm, c * q_of(e));
  }
  return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> args) const {
  if (args.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("substitute: arity mismatch");
  const int m = args.empty() ? 1 : args[0].vars();
  for (const auto& a : args)
    if (a.vars() != m)
      throw std::invalid_argument("substitute: arguments have mixed dimensions");

  // Per-argument power caches up to the largest exponent actually used.
  std::vector<std::uint32_t> max_exp(n_, 0);
  for (const auto& [mono, c] : terms_)
    for (int i = 0; i < n_; ++i) max_exp[i] = std::max(max_exp[i], mono.exps[i]);
  std::vector<std::vector<Polynomial>> powers(n_);
  for (int i = 0; i < n_; ++i) {
    powers[i].reserve(max_exp[i] + 1);
    powers[i].push_back(Polynomial::constant(m, Q(1)));
    for (std::uint32_t e = 1; e <= max_exp[i]; ++e)
      powers[i].push_back(powers[i].back() * args[i]);
  }

  Polynomial result(m);
  for (const auto& [mono, c] : terms_) {
    Polynomial prod = Polynomial::constant(m, c);
    for (int i = 0; i < n_; ++i)
      if (mono.exps[i] > 0) prod = prod * powers[i][mono.exps[i]];
    result += prod;
  }
  return result;
}

std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& h) {
  if (h.is_zero()) throw std::invalid_argument("try_divide: division by zero polynomial");
  if (f.vars() != h.vars())
    throw std::invalid_argument("try_divide: ambient dimension mismatch");
  Polynomial q(f.vars());
  Polynomial r = f;
  // Any nonzero multiple of h has leading monomial divisible by lm(h), so a
  // failed leading-term division already refutes exact divisibility.
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    const Monomial& lh = h.leading_monomial();
    if (!lh.divides(lr)) return std::nullopt;
    Polynomial t = Polynomial::term(f.vars(), lr.quotient_by(lh), r.leading_coeff() / h.leading_coeff());
    q += t;
    r -= t * h;
  }
  if (!(q * h == f)) return std::nullopt;  // exactness re-check
  return q;
}

}  // namespace mdeg
