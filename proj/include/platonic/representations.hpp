#ifndef PLATONIC_REPRESENTATIONS_HPP
#define PLATONIC_REPRESENTATIONS_HPP

// Four-term integer combinations of consecutive platonic numbers that hit a
// prescribed target:
//
//   3t_n - 8t_{n+1} + 7t_{n+2} - 2t_{n+3} =  n
//   2o_n - 5o_{n+1} + 4o_{n+2} -  o_{n+3} = 4n
//   2c_n - 5c_{n+1} + 4c_{n+2} -  c_{n+3} = 6n
//   5i_n -12i_{n+1} + 9i_{n+2} - 2i_{n+3} = 45n
//   5d_n -12d_{n+1} + 9d_{n+2} - 2d_{n+3} = 81n
//
// The last one is 3Δ²d_n - 2Δ³d_n = 3(27n + 18) - 2·27. Its multiplier is
// 81, not 54: no fixed combination of four consecutive dodecahedral numbers
// is linear in n with slope 54, since aΔ² + bΔ³ = 27an + 18a + 27b.
//
// Negative targets reuse the identity at n = |m| with every coefficient
// negated, so indices never leave the non-negative range.

#include "platonic/integer.hpp"
#include "platonic/kind.hpp"
#include "platonic/sequences.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace platonic {

using Coefficients = std::array<int, 4>;

struct Representation {
  PlatonicKind kind;
  Integer base_index;
  Coefficients coefficients{};
  Integer target;

  std::array<Integer, 4> indices() const {
    return {base_index, base_index + 1, base_index + 2, base_index + 3};
  }
  std::array<Integer, 4> values() const {
    std::array<Integer, 4> out;
    for (std::size_t j = 0; j < 4; ++j) {
      out[j] = platonic_value(kind, base_index + j);
    }
    return out;
  }
  // At base index 0 the first term is the (zero) value t_0, o_0, ...
  bool includes_index_zero() const { return base_index == 0; }
};

/// Raised when the target is not a multiple of the kind's modulus.
class NotDivisible : public std::domain_error {
 public:
  NotDivisible(PlatonicKind kind, Integer target, int modulus)
      : std::domain_error(std::string(name(kind)) +
                          " representation requires a multiple of " +
                          std::to_string(modulus) + "; " + target.str() +
                          " is not divisible by " + std::to_string(modulus)),
        kind_(kind),
        target_(std::move(target)),
        modulus_(modulus) {}

  PlatonicKind kind() const noexcept { return kind_; }
  const Integer& target() const noexcept { return target_; }
  int modulus() const noexcept { return modulus_; }

 private:
  PlatonicKind kind_;
  Integer target_;
  int modulus_;
};

/// Multiplier M in "combination = M·n" for each family.
constexpr int representation_modulus(PlatonicKind kind) {
  switch (kind) {
    case PlatonicKind::Tetrahedral: return 1;
    case PlatonicKind::Octahedral: return 4;
    case PlatonicKind::Cube: return 6;
    case PlatonicKind::Icosahedral: return 45;
    case PlatonicKind::Dodecahedral: return 81;
  }
  return 0;
}

constexpr Coefficients representation_coefficients(PlatonicKind kind) {
  switch (kind) {
    case PlatonicKind::Tetrahedral: return {3, -8, 7, -2};
    case PlatonicKind::Octahedral:
    case PlatonicKind::Cube: return {2, -5, 4, -1};
    case PlatonicKind::Icosahedral:
    case PlatonicKind::Dodecahedral: return {5, -12, 9, -2};
  }
  return {};
}

inline Integer evaluate_representation(const Representation& r) {
  Integer sum = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    sum += r.coefficients[j] * platonic_value(r.kind, r.base_index + j);
  }
  return sum;
}

inline Representation represent_multiple(PlatonicKind kind, const Integer& m) {
  const int modulus = representation_modulus(kind);
  Integer quotient;
  Integer remainder;
  boost::multiprecision::divide_qr(m, Integer(modulus), quotient, remainder);
  if (remainder != 0) throw NotDivisible(kind, m, modulus);

  Representation r{kind, abs(quotient), representation_coefficients(kind), m};
  if (m < 0) {
    for (int& c : r.coefficients) c = -c;
  }
  return r;
}

/// Every integer is a combination of four consecutive tetrahedral numbers.
inline Representation represent_tetrahedral(const Integer& m) {
  return represent_multiple(PlatonicKind::Tetrahedral, m);
}

}  // namespace platonic

#endif  // PLATONIC_REPRESENTATIONS_HPP
