#ifndef PLATONIC_SEQUENCES_HPP
#define PLATONIC_SEQUENCES_HPP

// Platonic numbers by closed form and by the order-4 linear recurrence, plus
// forward differences.
//
//   t_n = n(n+1)(n+2)/6      o_n = n(2n^2+1)/3      c_n = n^3
//   i_n = n(5n^2-5n+2)/2     d_n = n(9n^2-9n+2)/2
//
// Every family is a cubic in n, so each satisfies
//   y_n = 4y_{n-1} - 6y_{n-2} + 4y_{n-3} - y_{n-4}
// and has identically zero fourth forward difference. Index 0 is accepted
// and yields 0 for every family.

#include "platonic/integer.hpp"
#include "platonic/kind.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace platonic {

/// Exact closed-form value of the n-th number of the given family.
inline Integer platonic_value(PlatonicKind kind, const Integer& n) {
  if (n < 0) {
    throw DomainError("platonic index must be non-negative, got " + n.str());
  }
  switch (kind) {
    case PlatonicKind::Tetrahedral:
      return detail::exact_div(n * (n + 1) * (n + 2), 6);
    case PlatonicKind::Octahedral:
      return detail::exact_div(n * (2 * n * n + 1), 3);
    case PlatonicKind::Cube:
      return n * n * n;
    case PlatonicKind::Icosahedral:
      return detail::exact_div(n * (5 * n * n - 5 * n + 2), 2);
    case PlatonicKind::Dodecahedral:
      return detail::exact_div(n * (9 * n * n - 9 * n + 2), 2);
  }
  throw DomainError("unknown platonic kind");
}

/// A run of consecutive values of one family.
struct Sequence {
  PlatonicKind kind;
  std::size_t start_index = 1;
  std::vector<Integer> values;

  Integer at_index(std::size_t index) const {
    return values.at(index - start_index);
  }
};

/// Values at indices 1..count. The first four come from the closed form,
/// every later value from the recurrence alone.
inline Sequence platonic_values_by_recurrence(PlatonicKind kind,
                                              std::size_t count) {
  if (count < 1) throw DomainError("count must be at least 1");
  Sequence seq{kind, 1, {}};
  seq.values.reserve(count);
  for (std::size_t n = 1; n <= count && n <= 4; ++n) {
    seq.values.push_back(platonic_value(kind, n));
  }
  for (std::size_t j = 4; j < count; ++j) {
    const auto& v = seq.values;
    seq.values.push_back(4 * v[j - 1] - 6 * v[j - 2] + 4 * v[j - 3] - v[j - 4]);
  }
  return seq;
}

/// Closed-form values at indices first..last inclusive.
inline Sequence platonic_range(PlatonicKind kind, std::size_t first,
                               std::size_t last) {
  if (first > last) throw DomainError("empty index range");
  Sequence seq{kind, first, {}};
  seq.values.reserve(last - first + 1);
  for (std::size_t n = first; n <= last; ++n) {
    seq.values.push_back(platonic_value(kind, n));
  }
  return seq;
}

/// Applies the forward difference operator `order` times. Each application
/// shortens the list by one.
inline std::vector<Integer> forward_difference(std::span<const Integer> values,
                                               std::size_t order) {
  std::vector<Integer> out(values.begin(), values.end());
  if (order == 0) return out;
  if (order >= values.size()) {
    throw DomainError("need at least " + std::to_string(order + 1) +
                      " values for a forward difference of order " +
                      std::to_string(order) + ", got " +
                      std::to_string(values.size()));
  }
  for (std::size_t k = 0; k < order; ++k) {
    for (std::size_t j = 0; j + 1 < out.size(); ++j) {
      out[j] = out[j + 1] - out[j];
    }
    out.pop_back();
  }
  return out;
}

/// Columns 0..4 hold the values and their first four forward differences.
struct DiffTable {
  static constexpr std::size_t kOrders = 5;

  PlatonicKind kind;
  std::size_t rows = 0;
  std::array<std::vector<Integer>, kOrders> columns;
};

inline DiffTable difference_table(PlatonicKind kind, std::size_t rows) {
  if (rows < DiffTable::kOrders) {
    throw DomainError("a difference table needs at least 5 rows, got " +
                      std::to_string(rows));
  }
  DiffTable table{kind, rows, {}};
  table.columns[0] = platonic_range(kind, 1, rows).values;
  for (std::size_t k = 1; k < DiffTable::kOrders; ++k) {
    table.columns[k] = forward_difference(table.columns[k - 1], 1);
  }
  return table;
}

}  // namespace platonic

#endif  // PLATONIC_SEQUENCES_HPP
