#ifndef PLATONIC_IDENTITIES_HPP
#define PLATONIC_IDENTITIES_HPP

#include "platonic/integer.hpp"
#include "platonic/kind.hpp"
#include "platonic/sequences.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace platonic {

/// One evaluation of a closed-form forward-difference identity.
/// `actual` is the difference taken from raw values, `expected` the
/// polynomial right-hand side in n.
struct IdentityCheck {
  PlatonicKind kind;
  int order = 0;
  Integer index;
  Integer expected;
  Integer actual;
  bool holds = false;
};

namespace detail {

// Binomial coefficients with alternating sign: Δ^k y_n = Σ_j c_j y_{n+j}.
inline constexpr std::array<std::array<int, 5>, 5> kDifferenceWeights = {{
    {1, 0, 0, 0, 0},
    {-1, 1, 0, 0, 0},
    {1, -2, 1, 0, 0},
    {-1, 3, -3, 1, 0},
    {1, -4, 6, -4, 1},
}};

inline Integer raw_difference(PlatonicKind kind, int order, const Integer& n) {
  Integer sum = 0;
  for (int j = 0; j <= order; ++j) {
    sum += kDifferenceWeights[order][j] * platonic_value(kind, n + j);
  }
  return sum;
}

}  // namespace detail

/// Right-hand side of the closed-form k-th difference identity for `kind`.
inline Integer difference_polynomial(PlatonicKind kind, int order,
                                     const Integer& n) {
  using K = PlatonicKind;
  switch (order) {
    case 1:
      switch (kind) {
        // Half-integer coefficients are folded into a single exact division.
        case K::Tetrahedral: return detail::exact_div(n * n + 3 * n + 2, 2);
        case K::Octahedral: return 2 * n * n + 2 * n + 1;
        case K::Cube: return 3 * n * n + 3 * n + 1;
        case K::Icosahedral: return detail::exact_div(15 * n * n + 5 * n + 2, 2);
        case K::Dodecahedral: return detail::exact_div(27 * n * n + 9 * n + 2, 2);
      }
      break;
    case 2:
      switch (kind) {
        case K::Tetrahedral: return n + 2;
        case K::Octahedral: return 4 * n + 4;
        case K::Cube: return 6 * n + 6;
        case K::Icosahedral: return 15 * n + 10;
        case K::Dodecahedral: return 27 * n + 18;
      }
      break;
    case 3:
      switch (kind) {
        case K::Tetrahedral: return 1;
        case K::Octahedral: return 4;
        case K::Cube: return 6;
        case K::Icosahedral: return 15;
        case K::Dodecahedral: return 27;
      }
      break;
    case 4:
      return 0;
    default:
      break;
  }
  throw DomainError("identity order must be in 1..4, got " +
                    std::to_string(order));
}

inline IdentityCheck identity_residual(PlatonicKind kind, int order,
                                       const Integer& n) {
  if (order < 1 || order > 4) {
    throw DomainError("identity order must be in 1..4, got " +
                      std::to_string(order));
  }
  if (n < 1) throw DomainError("identity index must be >= 1, got " + n.str());
  IdentityCheck check{kind, order, n, difference_polynomial(kind, order, n),
                      detail::raw_difference(kind, order, n), false};
  check.holds = check.expected == check.actual;
  return check;
}

/// Δ²t_n − 2Δ³t_n from raw tetrahedral values. Equals n.
inline Integer combined_residual_tetrahedral(const Integer& n) {
  if (n < 1) throw DomainError("index must be >= 1, got " + n.str());
  return detail::raw_difference(PlatonicKind::Tetrahedral, 2, n) -
         2 * detail::raw_difference(PlatonicKind::Tetrahedral, 3, n);
}

}  // namespace platonic

#endif  // PLATONIC_IDENTITIES_HPP
