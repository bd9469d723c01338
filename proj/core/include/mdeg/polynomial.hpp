#ifndef MDEG_POLYNOMIAL_HPP
#define MDEG_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mdeg/degree.hpp"
#include "mdeg/rational.hpp"

namespace mdeg {

/// Exponent vector of a single monomial. The vector length equals the
/// ambient variable count of the owning polynomial.
struct Monomial {
  std::vector<std::uint32_t> exps;

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto e : exps) t += e;
    return t;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }

  Monomial times(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += other.exps[i];
    return r;
  }

  Monomial quotient_by(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= other.exps[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, ascending. Total degree decides first, then
/// the exponent vector lexicographically. This is a monomial well-order, so
/// leading monomials strictly decrease in division loops.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto ta = a.total();
    const auto tb = b.total();
    if (ta != tb) return ta < tb;
    return a.exps < b.exps;
  }
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
  std::size_t position;
};

/// Sparse multivariate polynomial with exact rational coefficients,
/// kept in canonical form: no zero coefficient is ever stored, so two
/// polynomials are equal exactly when their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Q, GrlexLess>;

  explicit Polynomial(int vars) : n_(check_vars(vars)) {}

  static Polynomial zero(int vars) { return Polynomial(vars); }
  static Polynomial constant(int vars, Q c);
  static Polynomial variable(int vars, int index);  // 1-based index
  static Polynomial term(int vars, Monomial m, Q c);

  /// Parses the canonical text grammar:
  ///   term   := [sign] [coeff ["*"]] factor*
  ///   coeff  := integer | integer "/" integer
  ///   factor := var ["^" natural]
  ///   var    := "x" | "y" | "z" | "x"<index>
  /// terms joined by "+" / "-", whitespace ignored.
  static Polynomial parse(std::string_view text, int vars);

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Degree total_degree() const;
  /// Highest homogeneous component; rejects the zero polynomial.
  Polynomial top() const;
  bool is_homogeneous() const;

  Q coeff(const Monomial& m) const;
  /// Leading term under grlex; both reject the zero polynomial.
  const Monomial& leading_monomial() const;
  const Q& leading_coeff() const;
  /// Largest exponent of one variable over all terms (0 for the zero poly).
  std::uint32_t degree_in(int index) const;  // 1-based index

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Q& c, const Polynomial& p);
  Polynomial pow(std::uint32_t e) const;

  /// Formal partial derivative with respect to variable `index` (1-based).
  Polynomial partial(int index) const;

  /// Evaluates this polynomial at the given argument tuple. Requires one
  /// argument per variable; all arguments must share an ambient dimension.
  Polynomial substitute(std::span<const Polynomial> args) const;
  Polynomial substitute(const std::vector<Polynomial>& args) const {
    return substitute(std::span<const Polynomial>(args));
  }

  /// Canonical printer: graded-lex descending, '*'-separated factors,
  /// explicit sign on negative coefficients. parse(str(), vars()) == *this.
  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  static int check_vars(int vars);
  void add_term(const Monomial& m, const Q& c);
  void require_same_dim(const Polynomial& other) const;

  int n_;
  TermMap terms_;
};

/// Exact division: returns q with f == q*h when h divides f, nothing
/// otherwise. The product q*h is re-verified before q is returned.
std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& h);

}  // namespace mdeg

#endif  // MDEG_POLYNOMIAL_HPP
