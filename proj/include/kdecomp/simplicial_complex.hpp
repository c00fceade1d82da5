#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kdecomp/context.hpp"
#include "kdecomp/monomial_ideal.hpp"
#include "kdecomp/vertex_set.hpp"

namespace kdecomp {

class Clutter;

/// A simplicial complex given by its facets, together with the ground set X
/// it lives on. X matters for Alexander duality and for Stanley-Reisner
/// ideals; it may contain elements that are not vertices of the complex
/// (e.g. after deleting a vertex).
///
/// The two degenerate complexes are distinguished by their facet lists:
/// the void complex {} has no facets, {emptyset} has the single facet {}.
class SimplicialComplex {
 public:
  /// Complex on `ground` generated by `faces`; non-maximal entries are dropped.
  static SimplicialComplex generated_by(ContextPtr ctx, VertexSet ground, std::vector<VertexSet> faces);
  static SimplicialComplex void_complex(ContextPtr ctx, VertexSet ground);
  static SimplicialComplex empty_face_only(ContextPtr ctx, VertexSet ground);
  static SimplicialComplex simplex(ContextPtr ctx, VertexSet ground, VertexSet facet);

  const ContextPtr& context() const noexcept { return ctx_; }
  VertexSet ground() const noexcept { return ground_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  /// Union of the facets.
  VertexSet vertices() const noexcept;

  bool is_void() const noexcept { return facets_.empty(); }
  bool is_empty_face_only() const noexcept { return facets_.size() == 1 && facets_.front().empty(); }
  bool is_simplex() const noexcept { return facets_.size() == 1; }
  /// max facet size - 1; -1 for {emptyset}. Throws ConventionError on the void complex.
  int dimension() const;
  bool contains_face(VertexSet f) const noexcept;
  /// Every face, in shortlex order.
  std::vector<VertexSet> faces() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return same_context(a.ctx_, b.ctx_) && a.ground_ == b.ground_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(ContextPtr ctx, VertexSet ground, std::vector<VertexSet> facets);

  ContextPtr ctx_;
  VertexSet ground_;
  std::vector<VertexSet> facets_;
};

/// Inclusion-minimal subsets of the ground set that are not faces.
/// Throws ConventionError for the void complex.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

/// I_Delta inside K[ambient]: generated by x^N over the minimal nonfaces N
/// of Delta regarded as a complex on `ambient`. Throws ImproperIdealError for
/// the void complex, whose ideal is the unit ideal.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, VertexSet ambient);
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  return stanley_reisner_ideal(complex, complex.ground());
}

/// The independence complex of a clutter: maximal edge-free vertex subsets.
SimplicialComplex complex_from_nonfaces(const Clutter& clutter);

/// The complex on X whose Stanley-Reisner ideal is `ideal` (squarefree).
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, VertexSet ground);

/// {X \ F : F not in Delta}, on the same ground set X.
SimplicialComplex alexander_dual_complex(const SimplicialComplex& complex);

/// P_{W_1} cap ... cap P_{W_t} for I = (x^{W_1}, ..., x^{W_t}).
/// Throws NotSquarefreeError, and ImproperIdealError for the zero ideal.
MonomialIdeal alexander_dual_ideal(const MonomialIdeal& ideal);

/// (x^{X \ F} : F a facet), which equals I_{Delta^dual}. The zero ideal for the
/// void complex; throws ImproperIdealError when a facet is all of X.
MonomialIdeal facet_complement_ideal(const SimplicialComplex& complex);

/// lk(F) on the ground set X \ F. Throws NotAFaceError if F is not a face.
SimplicialComplex link(const SimplicialComplex& complex, VertexSet face);

/// Delta \ F = {G in Delta : F not a subset of G}, on the same ground set.
SimplicialComplex delete_face(const SimplicialComplex& complex, VertexSet face);

std::string to_string(const SimplicialComplex& complex);

}  // namespace kdecomp
