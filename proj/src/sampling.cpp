#include "kdecomp/sampling.hpp"

#include <vector>

#include "kdecomp/errors.hpp"

namespace kdecomp {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

VertexSet random_subset(Rng& rng, std::size_t n) {
  return VertexSet(std::uniform_int_distribution<std::uint64_t>(0, VertexSet::first(n).mask())(rng));
}

}  // namespace

MonomialIdeal random_ideal(Rng& rng, std::size_t n, std::size_t max_generators, int max_exponent) {
  if (n == 0 || max_generators == 0 || max_exponent < 1) throw PreconditionError("empty sampling range");
  std::uniform_int_distribution<int> exponent(0, max_exponent);
  std::vector<Monomial> gens;
  const auto m = uniform(rng, 1, max_generators);
  while (gens.size() < m) {
    std::vector<int> e(n);
    for (auto& a : e) a = exponent(rng);
    Monomial mono(std::move(e));
    if (!mono.is_one()) gens.push_back(std::move(mono));
  }
  return MonomialIdeal::generated_by(indexed_context(n), std::move(gens));
}

MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t n, std::size_t max_generators) {
  return random_ideal(rng, n, max_generators, 1);
}

SimplicialComplex random_complex(Rng& rng, std::size_t n, std::size_t max_facets) {
  if (n == 0 || max_facets == 0) throw PreconditionError("empty sampling range");
  std::vector<VertexSet> faces(uniform(rng, 1, max_facets));
  for (auto& f : faces) f = random_subset(rng, n);
  return SimplicialComplex::generated_by(indexed_context(n), VertexSet::first(n), std::move(faces));
}

Clutter random_clutter(Rng& rng, std::size_t n, std::size_t max_edges) {
  if (n < 2 || max_edges == 0) throw PreconditionError("empty sampling range");
  std::vector<VertexSet> edges;
  const auto m = uniform(rng, 1, max_edges);
  while (edges.size() < m) {
    const auto e = random_subset(rng, n);
    if (e.size() >= 2) edges.push_back(e);
  }
  return Clutter::make(indexed_context(n), VertexSet::first(n), std::move(edges));
}

Clutter random_uniform_clutter(Rng& rng, std::size_t n, std::size_t r, double p) {
  if (r < 2 || r > n) throw PreconditionError("need 2 <= r <= n");
  std::bernoulli_distribution keep(p);
  std::vector<VertexSet> edges;
  for (auto s : subsets_of(VertexSet::first(n))) {
    if (s.size() == r && keep(rng)) edges.push_back(s);
  }
  return Clutter::make(indexed_context(n), VertexSet::first(n), std::move(edges));
}

}  // namespace kdecomp
