#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdecomp/betti_table.hpp"
#include "kdecomp/homology.hpp"
#include "kdecomp/simplicial_complex.hpp"

namespace kdecomp {

/// reg and pd of R/I_Delta in K[X], X the ground set, from the oracle.
QuotientInvariants complex_invariants(const SimplicialComplex& complex, Field field = {});

/// reg(R/I_Delta) against max{reg(R/I_{Delta \ s}), reg(R/I_{lk s}) + |s|}.
struct HaSides {
  int reg = 0;
  int reg_deletion = 0;
  int reg_link = 0;
  int face_size = 0;
  int rhs() const noexcept { return reg_deletion > reg_link + face_size ? reg_deletion : reg_link + face_size; }
  bool holds() const noexcept { return reg <= rhs(); }
  bool tight() const noexcept { return reg == rhs(); }
};

/// Throws PreconditionError for the empty face and NotAFaceError for a non-face.
HaSides ha_sides(const SimplicialComplex& complex, VertexSet face, Field field = {});

/// Randomized property suites behind `kdecomp verify`.
enum class Property { Terao, Ha, Regp, LemmaH, ThreeWay, Chordal };

std::string to_string(Property property);
std::optional<Property> parse_property(std::string_view name);

struct PropertyReport {
  Property property = Property::Terao;
  std::uint64_t seed = 0;
  std::size_t requested = 0;
  std::size_t checked = 0;  ///< instances that met the suite's precondition
  std::size_t sampled = 0;  ///< instances drawn
  std::vector<std::string> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }
  bool complete() const noexcept { return checked >= requested; }
};

/// Draws instances until `count` of them satisfy the suite's precondition (or
/// 200 * count draws have been made) and records every failure.
PropertyReport run_property(Property property, std::uint64_t seed, std::size_t count);

}  // namespace kdecomp
