#ifndef PLATONIC_PERIODICITY_HPP
#define PLATONIC_PERIODICITY_HPP

#include "platonic/integer.hpp"
#include "platonic/kind.hpp"
#include "platonic/sequences.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace platonic {

/// Residues of indices 1..count reduced into [0, modulus).
struct ResidueSequence {
  PlatonicKind kind;
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> residues;
};

/// Closed-form period against the empirically minimal one.
struct PeriodReport {
  PlatonicKind kind;
  std::uint64_t modulus = 0;
  std::uint64_t closed_form = 0;
  std::uint64_t empirical = 0;
  bool agrees = false;
};

namespace detail {

inline void require_modulus(std::uint64_t d) {
  if (d < 2) {
    throw DomainError("modulus must be greater than 1, got " +
                      std::to_string(d));
  }
}

}  // namespace detail

/// Period of the family mod d predicted by the closed-form case analysis.
/// Each value is proven to be a period; whether it is the minimal one is
/// checked by `check_period_claim`.
inline std::uint64_t closed_form_period(PlatonicKind kind, std::uint64_t d) {
  detail::require_modulus(d);
  const bool even = d % 2 == 0;
  const bool by_three = d % 3 == 0;
  switch (kind) {
    case PlatonicKind::Tetrahedral:
      if (even) return by_three ? 6 * d : 2 * d;
      return by_three ? 3 * d : d;
    case PlatonicKind::Octahedral:
      return by_three ? 3 * d : d;
    case PlatonicKind::Cube:
      return d;
    case PlatonicKind::Icosahedral:
    case PlatonicKind::Dodecahedral:
      return even ? 2 * d : d;
  }
  throw DomainError("unknown platonic kind");
}

inline ResidueSequence residue_sequence(PlatonicKind kind, std::uint64_t d,
                                        std::size_t count) {
  detail::require_modulus(d);
  if (count < 1) throw DomainError("count must be at least 1");
  ResidueSequence seq{kind, d, {}};
  seq.residues.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    seq.residues.push_back(detail::mod_floor(platonic_value(kind, n), d));
  }
  return seq;
}

/// Smallest shift under which the residues mod d repeat.
///
/// With L the closed-form period, the residues of indices 1..2L are compared
/// at every divisor of L in ascending order. The minimal period of a purely
/// periodic sequence divides every period, so the first verified divisor is
/// the minimum. Throws ConsistencyError if not even L verifies.
inline std::uint64_t empirical_period(PlatonicKind kind, std::uint64_t d) {
  const std::uint64_t period = closed_form_period(kind, d);
  const auto seq = residue_sequence(kind, d, 2 * period);
  const auto& r = seq.residues;
  for (std::uint64_t m = 1; m <= period; ++m) {
    if (period % m != 0) continue;
    bool repeats = true;
    for (std::uint64_t j = 0; j < period && repeats; ++j) {
      repeats = r[j + m] == r[j];
    }
    if (repeats) return m;
  }
  throw ConsistencyError(std::string(name(kind)) + " numbers mod " +
                         std::to_string(d) + " do not repeat with period " +
                         std::to_string(period));
}

inline PeriodReport check_period_claim(PlatonicKind kind, std::uint64_t d) {
  PeriodReport report{kind, d, closed_form_period(kind, d),
                      empirical_period(kind, d), false};
  report.agrees = report.closed_form == report.empirical;
  return report;
}

}  // namespace platonic

#endif  // PLATONIC_PERIODICITY_HPP
