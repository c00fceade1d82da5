#pragma once

#include <cstddef>
#include <random>

#include "kdecomp/clutter.hpp"
#include "kdecomp/monomial_ideal.hpp"
#include "kdecomp/simplicial_complex.hpp"

namespace kdecomp {

/// Every random generator takes an explicit engine; nothing is seeded from the clock.
using Rng = std::mt19937_64;

/// A nonzero ideal in x1..xn from 1..max_generators monomials with exponents
/// in 0..max_exponent (before minimalization).
MonomialIdeal random_ideal(Rng& rng, std::size_t n, std::size_t max_generators, int max_exponent);

/// As random_ideal with max_exponent 1.
MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t n, std::size_t max_generators);

/// A complex on x1..xn generated by 1..max_facets random subsets (possibly empty).
SimplicialComplex random_complex(Rng& rng, std::size_t n, std::size_t max_facets);

/// A clutter on x1..xn from 1..max_edges random subsets of size >= 2.
Clutter random_clutter(Rng& rng, std::size_t n, std::size_t max_edges);

/// An r-uniform clutter on x1..xn containing each r-subset with probability p.
Clutter random_uniform_clutter(Rng& rng, std::size_t n, std::size_t r, double p);

}  // namespace kdecomp
