#include "kdecomp/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "kdecomp/clutter.hpp"
#include "kdecomp/errors.hpp"

namespace kdecomp {

namespace {

std::vector<VertexSet> complements(VertexSet ground, const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (auto s : sets) out.push_back(ground - s);
  return out;
}

MonomialIdeal ideal_of_sets(const ContextPtr& ctx, const std::vector<VertexSet>& sets) {
  std::vector<Monomial> gens;
  gens.reserve(sets.size());
  for (auto s : sets) gens.push_back(monomial_of_set(s, ctx->size()));
  return MonomialIdeal::generated_by(ctx, std::move(gens));
}

}  // namespace

SimplicialComplex::SimplicialComplex(ContextPtr ctx, VertexSet ground, std::vector<VertexSet> facets)
    : ctx_(std::move(ctx)), ground_(ground), facets_(std::move(facets)) {
  if (!ctx_) throw PreconditionError("complex needs a variable context");
  if (!ground_.is_subset_of(ctx_->all())) throw UnknownVertexError("ground set lies outside the context");
  for (auto f : facets_) {
    if (!f.is_subset_of(ground_)) throw UnknownVertexError("face lies outside the ground set");
  }
}

SimplicialComplex SimplicialComplex::generated_by(ContextPtr ctx, VertexSet ground, std::vector<VertexSet> faces) {
  return SimplicialComplex(std::move(ctx), ground, maximal_sets(std::move(faces)));
}

SimplicialComplex SimplicialComplex::void_complex(ContextPtr ctx, VertexSet ground) {
  return SimplicialComplex(std::move(ctx), ground, {});
}

SimplicialComplex SimplicialComplex::empty_face_only(ContextPtr ctx, VertexSet ground) {
  return SimplicialComplex(std::move(ctx), ground, {VertexSet{}});
}

SimplicialComplex SimplicialComplex::simplex(ContextPtr ctx, VertexSet ground, VertexSet facet) {
  return SimplicialComplex(std::move(ctx), ground, {facet});
}

VertexSet SimplicialComplex::vertices() const noexcept {
  VertexSet out;
  for (auto f : facets_) out = out | f;
  return out;
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw ConventionError("the void complex has no dimension");
  std::size_t largest = 0;
  for (auto f : facets_) largest = std::max(largest, f.size());
  return static_cast<int>(largest) - 1;
}

bool SimplicialComplex::contains_face(VertexSet f) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(), [f](VertexSet g) { return f.is_subset_of(g); });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet> seen;
  for (auto f : facets_) {
    for (auto s : subsets_of(f)) seen.insert(s);
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  sort_shortlex(out);
  return out;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex) {
  if (complex.is_void()) throw ConventionError("minimal nonfaces of the void complex are not defined");
  const auto family = complements(complex.ground(), complex.facets());
  return minimal_transversals(family);
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, VertexSet ambient) {
  if (complex.is_void()) throw ImproperIdealError("the void complex has the unit ideal as Stanley-Reisner ideal");
  if (!complex.vertices().is_subset_of(ambient)) throw PreconditionError("complex has vertices outside the ambient set");
  const auto family = complements(ambient, complex.facets());
  return ideal_of_sets(complex.context(), minimal_transversals(family));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, VertexSet ground) {
  if (!ideal.is_squarefree()) throw NotSquarefreeError("Stanley-Reisner complex needs a squarefree ideal");
  std::vector<VertexSet> supports;
  for (const auto& g : ideal.generators()) {
    auto s = support(g);
    if (!s.is_subset_of(ground)) throw PreconditionError("generator uses a variable outside the ground set");
    supports.push_back(s);
  }
  return SimplicialComplex::generated_by(ideal.context(), ground, complements(ground, minimal_transversals(supports)));
}

SimplicialComplex complex_from_nonfaces(const Clutter& clutter) {
  const auto covers = minimal_transversals(clutter.edges());
  return SimplicialComplex::generated_by(clutter.context(), clutter.vertices(),
                                         complements(clutter.vertices(), covers));
}

SimplicialComplex alexander_dual_complex(const SimplicialComplex& complex) {
  const auto family = complements(complex.ground(), complex.facets());
  const auto nonfaces = minimal_transversals(family);
  return SimplicialComplex::generated_by(complex.context(), complex.ground(),
                                         complements(complex.ground(), nonfaces));
}

MonomialIdeal alexander_dual_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw NotSquarefreeError("Alexander duality needs a squarefree ideal");
  if (ideal.is_zero()) throw ImproperIdealError("the Alexander dual of the zero ideal is the unit ideal");
  std::vector<VertexSet> supports;
  for (const auto& g : ideal.generators()) supports.push_back(support(g));
  return ideal_of_sets(ideal.context(), minimal_transversals(supports));
}

MonomialIdeal facet_complement_ideal(const SimplicialComplex& complex) {
  std::vector<Monomial> gens;
  for (auto f : complex.facets()) {
    const auto c = complex.ground() - f;
    if (c.empty()) throw ImproperIdealError("a facet equal to the ground set gives the unit ideal");
    gens.push_back(monomial_of_set(c, complex.context()->size()));
  }
  return MonomialIdeal::from_minimal(complex.context(), std::move(gens));
}

SimplicialComplex link(const SimplicialComplex& complex, VertexSet face) {
  if (!complex.contains_face(face)) throw NotAFaceError("link of a set that is not a face");
  std::vector<VertexSet> facets;
  for (auto g : complex.facets()) {
    if (face.is_subset_of(g)) facets.push_back(g - face);
  }
  return SimplicialComplex::generated_by(complex.context(), complex.ground() - face, std::move(facets));
}

SimplicialComplex delete_face(const SimplicialComplex& complex, VertexSet face) {
  if (face.empty()) throw PreconditionError("deleting the empty face is not supported");
  std::vector<VertexSet> faces;
  for (auto g : complex.facets()) {
    if (!face.is_subset_of(g)) {
      faces.push_back(g);
    } else {
      for (auto v : face) faces.push_back(g.without(v));
    }
  }
  return SimplicialComplex::generated_by(complex.context(), complex.ground(), std::move(faces));
}

std::string to_string(const SimplicialComplex& complex) {
  if (complex.is_void()) return "{}";
  std::string out = "<";
  bool first = true;
  for (auto f : complex.facets()) {
    if (!first) out += ", ";
    out += format_set(f, *complex.context());
    first = false;
  }
  out += '>';
  return out;
}

}  // namespace kdecomp
