#ifndef MDEG_RATIONAL_HPP
#define MDEG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mdeg {

/// Exact rational coefficients. All arithmetic in this library is exact;
/// floating point never enters any computation.
using Q = mpq_class;

inline Q q_of(std::int64_t n) { return Q(static_cast<long>(n)); }

inline Q q_pow(const Q& base, std::uint64_t e) {
  Q acc(1);
  Q b = base;
  std::uint64_t k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return acc;
}

inline std::string q_str(const Q& v) { return v.get_str(); }

}  // namespace mdeg

#endif  // MDEG_RATIONAL_HPP
