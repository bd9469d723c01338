#ifndef MDEG_DEGREE_HPP
#define MDEG_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mdeg {

using i64 = std::int64_t;

/// Total degree of a polynomial, with the convention deg 0 = -infinity.
/// -infinity is absorbing under addition and smaller than every finite value.
class Degree {
 public:
  constexpr Degree() noexcept : finite_(false), value_(0) {}
  constexpr explicit Degree(std::int64_t v) noexcept : finite_(true), value_(v) {}

  static constexpr Degree neg_inf() noexcept { return Degree(); }

  constexpr bool is_finite() const noexcept { return finite_; }

  std::int64_t value() const {
    if (!finite_) throw std::logic_error("Degree::value: degree is -infinity");
    return value_;
  }

  friend constexpr bool operator==(Degree a, Degree b) noexcept {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    return a.value_ <=> b.value_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) noexcept {
    if (!a.finite_ || !b.finite_) return neg_inf();
    return Degree(a.value_ + b.value_);
  }

  std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  bool finite_;
  std::int64_t value_;
};

constexpr bool operator==(Degree a, std::int64_t b) noexcept { return a == Degree(b); }
constexpr std::strong_ordering operator<=>(Degree a, std::int64_t b) noexcept {
  return a <=> Degree(b);
}

}  // namespace mdeg

#endif  // MDEG_DEGREE_HPP
