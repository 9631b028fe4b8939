#ifndef PLATONIC_KIND_HPP
#define PLATONIC_KIND_HPP

#include "platonic/integer.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace platonic {

enum class PlatonicKind { Tetrahedral, Octahedral, Cube, Icosahedral, Dodecahedral };

inline constexpr std::array<PlatonicKind, 5> kAllKinds = {
    PlatonicKind::Tetrahedral, PlatonicKind::Octahedral, PlatonicKind::Cube,
    PlatonicKind::Icosahedral, PlatonicKind::Dodecahedral};

constexpr std::string_view name(PlatonicKind kind) {
  switch (kind) {
    case PlatonicKind::Tetrahedral: return "tetrahedral";
    case PlatonicKind::Octahedral: return "octahedral";
    case PlatonicKind::Cube: return "cube";
    case PlatonicKind::Icosahedral: return "icosahedral";
    case PlatonicKind::Dodecahedral: return "dodecahedral";
  }
  return "?";
}

// Single-letter symbol used in the printed tables (t, o, c, i, d).
constexpr char symbol(PlatonicKind kind) { return name(kind)[0]; }

/// Accepts the full name, its plural, or the single-letter symbol.
inline std::optional<PlatonicKind> parse_kind(std::string_view text) {
  for (PlatonicKind kind : kAllKinds) {
    std::string full(name(kind));
    if (text == full || text == full + "s" ||
        (text.size() == 1 && text[0] == symbol(kind))) {
      return kind;
    }
  }
  return std::nullopt;
}

}  // namespace platonic

#endif  // PLATONIC_KIND_HPP
