#pragma once

// Brute-force reference implementations that share no code with the library
// beyond the value types. They are slow and only meant for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kdecomp/clutter.hpp"
#include "kdecomp/monomial_ideal.hpp"
#include "kdecomp/simplicial_complex.hpp"

namespace kdecomp::testing {

/// Faces of the complex generated by `facets`, by closing downward.
inline std::vector<VertexSet> all_faces(const std::vector<VertexSet>& facets) {
  std::vector<VertexSet> out;
  for (auto f : facets) {
    for (auto s : subsets_of(f)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.mask() < b.mask(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool has_face(const std::vector<VertexSet>& faces, VertexSet f) {
  return std::find(faces.begin(), faces.end(), f) != faces.end();
}

/// The exchange condition on every face tau containing sigma, read off the
/// face list directly.
inline bool shedding_face_by_definition(const SimplicialComplex& complex, VertexSet sigma) {
  const auto faces = all_faces(complex.facets());
  const auto ground = complex.ground();
  for (auto tau : faces) {
    if (!sigma.is_subset_of(tau)) continue;
    for (auto v : sigma) {
      bool found = false;
      for (auto w : ground - tau) {
        if (has_face(faces, tau.with(w).without(v))) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

/// Squarefree monomial x^S lies in the ideal iff some generator support is in S.
inline bool squarefree_member(const MonomialIdeal& ideal, VertexSet s) {
  for (const auto& g : ideal.generators()) {
    VertexSet supp;
    for (std::size_t i = 0; i < g.arity(); ++i) {
      if (g[i] > 1) return false;
      if (g[i] == 1) supp = supp.with(i);
    }
    if (supp.is_subset_of(s)) return true;
  }
  return false;
}

/// The intersection of the primes (x_i : i in W) over the generator supports
/// W, as the set of squarefree monomials lying in every prime (minimal ones).
inline std::vector<VertexSet> dual_by_membership(const MonomialIdeal& ideal) {
  std::vector<VertexSet> supports;
  for (const auto& g : ideal.generators()) {
    VertexSet w;
    for (std::size_t i = 0; i < g.arity(); ++i) {
      if (g[i] != 0) w = w.with(i);
    }
    supports.push_back(w);
  }
  std::vector<VertexSet> members;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << ideal.arity()); ++m) {
    VertexSet s(m);
    if (std::all_of(supports.begin(), supports.end(), [s](VertexSet w) { return s.intersects(w); })) {
      members.push_back(s);
    }
  }
  std::vector<VertexSet> minimal;
  for (auto s : members) {
    const bool is_min = std::none_of(members.begin(), members.end(),
                                     [s](VertexSet t) { return t != s && t.is_subset_of(s); });
    if (is_min) minimal.push_back(s);
  }
  return minimal;
}

/// A graph on n <= 8 vertices as adjacency bitmasks.
struct Graph {
  std::size_t n = 0;
  std::vector<std::uint32_t> adj;
};

/// Chordal iff no vertex subset of size >= 4 induces a cycle, i.e. a connected
/// induced subgraph in which every vertex has exactly two neighbours.
inline bool chordal_by_induced_cycles(const Graph& g) {
  const std::uint32_t full = (std::uint32_t{1} << g.n) - 1;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (__builtin_popcount(s) < 4) continue;
    bool two_regular = true;
    for (std::size_t v = 0; v < g.n && two_regular; ++v) {
      if ((s >> v) & 1U) two_regular = __builtin_popcount(g.adj[v] & s) == 2;
    }
    if (!two_regular) continue;
    std::uint32_t seen = s & (~s + 1);
    std::uint32_t frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::size_t v = 0; v < g.n; ++v) {
        if ((frontier >> v) & 1U) next |= g.adj[v] & s;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s) return false;
  }
  return true;
}

}  // namespace kdecomp::testing
