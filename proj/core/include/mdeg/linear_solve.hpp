#ifndef MDEG_LINEAR_SOLVE_HPP
#define MDEG_LINEAR_SOLVE_HPP

#include <optional>
#include <vector>

#include "mdeg/rational.hpp"

namespace mdeg {

/// Exact Gaussian elimination over Q. Returns one solution of A x = b with
/// every free variable set to zero, or nothing when the system is
/// inconsistent. Rows of A must all have size b.size()-independent width;
/// the matrix may be rectangular.
std::optional<std::vector<Q>> solve_exact(std::vector<std::vector<Q>> a,
                                          std::vector<Q> b);

}  // namespace mdeg

#endif  // MDEG_LINEAR_SOLVE_HPP
