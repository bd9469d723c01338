#include <cctype>
#include <string>

#include "mdeg/polynomial.hpp"

namespace mdeg {

namespace {

constexpr std::uint32_t kMaxExponent = 1'000'000;

class Parser {
 public:
  Parser(std::string_view text, int vars) : text_(text), n_(vars) {}

  Polynomial run() {
    Polynomial result(n_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      result += parse_term(sign);
      skip_ws();
      first = false;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string read_digits() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    return digits;
  }

  Q parse_coeff() {
    std::string num = read_digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::string den = read_digits();
      if (den.empty()) fail("expected denominator digits after '/'");
      Q v(num + "/" + den);
      if (v.get_den() == 0) fail("zero denominator");
      v.canonicalize();
      return v;
    }
    return Q(num);
  }

  std::uint32_t parse_exponent() {
    skip_ws();
    std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent digits after '^'");
    if (digits.size() > 7) fail("exponent overflow");
    const unsigned long e = std::stoul(digits);
    if (e > kMaxExponent) fail("exponent overflow");
    return static_cast<std::uint32_t>(e);
  }

  // var := "x" | "y" | "z" | "x"<index>, mapped to 1-based indices.
  int parse_var() {
    const std::size_t start = pos_;
    const char c = peek();
    ++pos_;
    int index;
    if (c == 'y') {
      index = 2;
    } else if (c == 'z') {
      index = 3;
    } else {  // 'x'
      std::string digits = read_digits();
      index = digits.empty() ? 1 : std::stoi(digits.size() > 7 ? "99999999" : digits);
    }
    if (index < 1 || index > n_) {
      pos_ = start;
      fail("unknown variable for dimension " + std::to_string(n_));
    }
    return index;
  }

  Polynomial parse_term(int sign) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Q coeff(sign);
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= parse_coeff();
      saw_anything = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      }
    }
    Monomial mono{std::vector<std::uint32_t>(n_, 0)};
    while (!at_end() && (peek() == 'x' || peek() == 'y' || peek() == 'z')) {
      const int index = parse_var();
      std::uint32_t e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        e = parse_exponent();
      }
      if (mono.exps[index - 1] > kMaxExponent - e) fail("exponent overflow");
      mono.exps[index - 1] += e;
      saw_anything = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !(peek() == 'x' || peek() == 'y' || peek() == 'z'))
          fail("expected a variable after '*'");
      }
    }
    if (!saw_anything) fail("expected a coefficient or a variable");
    return Polynomial::term(n_, std::move(mono), std::move(coeff));
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

std::string var_name(int n, int index) {
  if (n == 3) {
    static constexpr const char* names[] = {"x", "y", "z"};
    return names[index - 1];
  }
  if (n <= 2) {
    // x and y read back unambiguously for 1 or 2 variables.
    return index == 1 ? "x" : "y";
  }
  return "x" + std::to_string(index);
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int vars) {
  check_vars(vars);
  return Parser(text, vars).run();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string piece;
    const bool negative = c < 0;
    const Q abs_c = negative ? Q(-c) : c;
    std::string factors;
    for (int i = 0; i < n_; ++i) {
      if (m.exps[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += var_name(n_, i + 1);
      if (m.exps[i] > 1) factors += '^' + std::to_string(m.exps[i]);
    }
    if (factors.empty()) {
      piece = abs_c.get_str();
    } else if (abs_c == 1) {
      piece = factors;
    } else {
      piece = abs_c.get_str() + '*' + factors;
    }
    if (negative) piece.insert(piece.begin(), '-');
    if (!out.empty() && piece[0] != '-') out += '+';
    out += piece;
  }
  return out;
}

}  // namespace mdeg
