#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdecomp/clutter.hpp"
#include "kdecomp/homology.hpp"
#include "kdecomp/monomial_ideal.hpp"
#include "kdecomp/verdict.hpp"

namespace kdecomp {

struct MinorStep {
  enum class Kind { Delete, Contract };
  Kind kind;
  std::size_t vertex;
  friend bool operator==(const MinorStep&, const MinorStep&) = default;
};

/// Operations leading from a root clutter to one of its minors.
using MinorTrace = std::vector<MinorStep>;

/// H \ v: drop v and every edge through it.
Clutter deletion(const Clutter& clutter, std::size_t v);

/// H / v: drop v, keep the minimal sets among {e \ v}. Singleton edges may
/// appear; throws ImproperContractionError if {v} is itself an edge.
Clutter contraction(const Clutter& clutter, std::size_t v);

/// H / S by contracting the elements of S in increasing order. Throws
/// ImproperContractionError if some edge lies inside S.
Clutter contraction_set(const Clutter& clutter, VertexSet s);

Clutter replay(const Clutter& root, const MinorTrace& trace);

/// Every two edges e1, e2 through v admit an edge e3 inside (e1 + e2) - v.
bool is_simplicial_vertex(const Clutter& clutter, std::size_t v);

/// For every other edge e2 through v some edge lies inside (e + e2) - v.
bool is_containment_pair(const Clutter& clutter, std::size_t v, VertexSet edge);

struct ChordalityOptions {
  std::size_t max_vertices = 16;
  std::size_t node_limit = 5'000'000;
};

struct ChordalityResult {
  Verdict verdict = Verdict::Undecided;
  /// For Verdict::No: a trace to a minor without simplicial vertices.
  std::optional<MinorTrace> witness;
  std::size_t minors_visited = 0;
};

/// Depth-first search over all minors, memoized on (vertices, edges).
/// Edgeless clutters have every vertex simplicial; contractions that would
/// create the empty edge are not minors and are skipped.
ChordalityResult is_chordal(const Clutter& clutter, ChordalityOptions options = {});

/// I(H) = (x^e : e in E(H)); the zero ideal for an edgeless clutter.
MonomialIdeal edge_ideal(const Clutter& clutter);

struct LemmaHIdeals {
  MonomialIdeal deletion;  ///< (x^s) + I(H \ x_1) + ... + I(H \ x_d)
  MonomialIdeal link;      ///< I(H / s)
};

/// For an edge e and x in e with s = e - x, the two ideals above. Both are
/// cross-checked against I_{Delta \ s} and I_{lk s} for Delta the independence
/// complex; a mismatch raises InternalError.
LemmaHIdeals lemma_h_ideals(const Clutter& clutter, VertexSet edge, std::size_t x);

/// Both regularity statements for a simplicial vertex x and an edge e through
/// it, with d = |e| - 1 and s = e - x. All regularities come from the oracle.
struct ChordalBoundReport {
  int d = 0;
  int reg = 0;               ///< reg(R/I(H))
  int reg_with_face = 0;     ///< reg(R/((x^s) + I(H)))
  int reg_contraction = 0;   ///< reg(R/I(H/s))
  int equality_rhs = 0;      ///< max{reg_with_face, reg_contraction + d}
  int deletion_sum = 0;      ///< sum_i reg(R/I(H \ x_i)) + (d - 1)
  int bound_rhs = 0;         ///< max{deletion_sum, reg_contraction + d}
  /// Whether H \ x_i and H / s were all found chordal (when checked).
  std::optional<bool> minors_chordal;

  bool equality_holds() const noexcept { return reg == equality_rhs; }
  bool bound_holds() const noexcept { return reg <= bound_rhs; }
};

/// Throws PreconditionError unless x is simplicial and x in e in E(H), and
/// InternalError if the equality or the bound fails.
ChordalBoundReport chordal_reg_bound(const Clutter& clutter, std::size_t x, VertexSet edge, Field field = {},
                                     bool check_minor_chordality = true);

/// "d:x,c:y"
std::string to_string(const MinorTrace& trace, const VariableContext& ctx);
/// Inverse of to_string; also accepts "delete:x" / "contract:x".
MinorTrace parse_minor_trace(std::string_view text, const VariableContext& ctx);

}  // namespace kdecomp
