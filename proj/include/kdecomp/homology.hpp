#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kdecomp/betti_table.hpp"
#include "kdecomp/monomial_ideal.hpp"
#include "kdecomp/simplicial_complex.hpp"

namespace kdecomp {

/// Coefficient field for the oracle: Q (characteristic 0) or Z/p.
struct Field {
  std::uint32_t characteristic = 0;

  static Field rationals() noexcept { return {}; }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return characteristic == 0; }
  friend bool operator==(Field, Field) = default;
};

inline constexpr std::size_t kOracleMaxVertices = 20;
inline constexpr int kOracleMaxLcmDegree = 24;

/// Face counts and boundary ranks of the augmented chain complex. Index 0
/// stands for dimension -1 (the empty face).
struct ChainComplexSummary {
  std::vector<std::size_t> face_counts;
  /// boundary_ranks[d + 1] = rank of C_d -> C_{d-1}; the last entry is 0.
  std::vector<std::size_t> boundary_ranks;

  /// dim H~_d = f_d - rank_d - rank_{d+1}, indexed from d = -1.
  std::vector<std::size_t> reduced_homology() const;
  /// sum_d (-1)^d f_d over d >= -1.
  long long reduced_euler_characteristic() const;
};

/// `faces` must be closed under taking subsets; they need not be sorted.
ChainComplexSummary summarize_chain_complex(std::span<const VertexSet> faces, Field field = {});

/// Delta_W = {F in Delta : F subset of W}, on ground set W.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet w);

/// Reduced homology dimensions by degree, starting at -1. All zero (and
/// empty) for the void complex. Throws BudgetExceededError above 20 vertices.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, Field field = {});
std::vector<std::size_t> reduced_homology_dims(std::span<const VertexSet> faces, Field field = {});

/// Hochster's formula: beta_{i,j}(I) = sum_{|W| = j} dim H~_{j-i-2}(Delta_W).
BettiTable betti_hochster(const MonomialIdeal& ideal, Field field = {});

/// beta_{i,a}(I) = dim H~_{i-1}(K^a) with K^a the upper Koszul complex
/// {squarefree s : x^{a-s} in I}, summed over |a| = j.
BettiTable betti_koszul(const MonomialIdeal& ideal, Field field = {});

/// Hochster for squarefree ideals, Koszul otherwise. Throws ConventionError
/// for the zero ideal.
BettiTable oracle_betti(const MonomialIdeal& ideal, Field field = {});

/// reg(R/I) and pd(R/I) from the oracle table; the zero ideal gives (0, 0)
/// flagged as a convention.
QuotientInvariants oracle_quotient_invariants(const MonomialIdeal& ideal, Field field = {});

}  // namespace kdecomp
