#include <random>

#include "doctest.h"

#include "kdecomp/clutters.hpp"
#include "kdecomp/errors.hpp"
#include "kdecomp/sampling.hpp"
#include "kdecomp/simplicial_complex.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace kdecomp;
using namespace kdecomp::testing;

TEST_CASE("vertex sets order by size, then lexicographically") {
  const VertexSet x{0}, y{1}, xy{0, 1}, xz{0, 2}, yz{1, 2};
  CHECK(shortlex_less(x, y));
  CHECK(shortlex_less(y, xy));
  CHECK(shortlex_less(xy, xz));
  CHECK(shortlex_less(xz, yz));
  CHECK_FALSE(shortlex_less(xz, xz));
  std::vector<VertexSet> sets{yz, x, xz, VertexSet{}, xy};
  sort_shortlex(sets);
  CHECK(sets == std::vector<VertexSet>{VertexSet{}, x, xy, xz, yz});
}

TEST_CASE("minimal transversals") {
  const std::vector<VertexSet> family{{0, 1}, {1, 2}};
  CHECK(minimal_transversals(family) == std::vector<VertexSet>{VertexSet{1}, VertexSet{0, 2}});
  CHECK(minimal_transversals(std::vector<VertexSet>{}) == std::vector<VertexSet>{VertexSet{}});
  CHECK(minimal_transversals(std::vector<VertexSet>{VertexSet{}}).empty());
}

TEST_CASE("variable contexts") {
  CHECK_THROWS_AS(make_context({"x", "x"}), PreconditionError);
  CHECK_THROWS_AS(make_context({""}), PreconditionError);
  const auto ctx = xyz();
  CHECK(ctx->index_of("z") == 2);
  CHECK_FALSE(ctx->index_of("w").has_value());
  CHECK(format_set(set(ctx, {"x", "z"}), *ctx) == "{x,z}");
  CHECK(same_context(ctx, xyz()));
  CHECK_THROWS_AS(require_same_context(ctx, xyzw()), ContextMismatch);
}

TEST_CASE("colon of monomials") {
  const auto ctx = xyz();
  CHECK(colon(mono(ctx, "x*y"), mono(ctx, "y*z")) == mono(ctx, "x"));
  CHECK(colon(mono(ctx, "x^2*y"), mono(ctx, "x^2*y")).is_one());
  CHECK(colon(mono(ctx, "x^2"), mono(ctx, "y^2")) == mono(ctx, "x^2"));
}

TEST_CASE("support and x^W") {
  const auto ctx = xyz();
  CHECK(support(mono(ctx, "x^2*y")) == set(ctx, {"x", "y"}));
  CHECK(support(mono(ctx, "1")).empty());
  CHECK(support(mono(ctx, "x*y*z")) == ctx->all());
  CHECK(monomial_of_set(VertexSet{}, 3).is_one());
  CHECK(monomial_of_set(set(ctx, {"x", "z"}), 3) == mono(ctx, "x*z"));
  CHECK(monomial_of_set(set(ctx, {"y"}), 3) == mono(ctx, "y"));
  CHECK(to_string(mono(ctx, "z*x^2"), *ctx) == "x^2*z");
}

TEST_CASE("minimalize") {
  const auto ctx = xyz();
  CHECK(ideal(ctx, {"x*y", "x*y*z"}) == ideal(ctx, {"x*y"}));
  CHECK(ideal(ctx, {"x*y", "x*z", "y*z"}).size() == 3);
  CHECK(ideal(ctx, {"x^2", "x^3", "y"}) == MonomialIdeal::from_minimal(ctx, {mono(ctx, "x^2"), mono(ctx, "y")}));
  CHECK_THROWS_AS(ideal(ctx, {"x", "1"}), ImproperIdealError);
  CHECK(to_string(ideal(ctx, {"y*z", "x*z", "x*y"})) == "(x*y, x*z, y*z)");
  CHECK(to_string(MonomialIdeal(ctx)) == "0");
}

TEST_CASE("minimalize is idempotent and order-insensitive") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto i = random_ideal(rng, 4, 8, 3);
    std::vector<Monomial> gens(i.generators().begin(), i.generators().end());
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(gens.front());
    CHECK(MonomialIdeal::generated_by(i.context(), gens) == i);
  }
}

TEST_CASE("minimal nonfaces") {
  const auto ctx = xyz();
  CHECK(minimal_nonfaces(complex(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}})) == sets(ctx, {{"x", "y", "z"}}));
  CHECK(minimal_nonfaces(complex(ctx, {{"x", "y", "z"}})).empty());
  const auto two = make_context({"x", "y"});
  CHECK(minimal_nonfaces(complex(two, {{"x"}, {"y"}})) == sets(two, {{"x", "y"}}));
  CHECK_THROWS_AS(minimal_nonfaces(SimplicialComplex::void_complex(ctx, ctx->all())), ConventionError);
}

TEST_CASE("Stanley-Reisner ideals") {
  const auto ctx = xyz();
  CHECK(stanley_reisner_ideal(complex(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}})) == ideal(ctx, {"x*y*z"}));
  CHECK(stanley_reisner_ideal(complex(ctx, {{"y", "z"}})) == ideal(ctx, {"x"}));
  const auto two = make_context({"x", "y"});
  CHECK(stanley_reisner_ideal(SimplicialComplex::empty_face_only(two, two->all())) == ideal(two, {"x", "y"}));
  CHECK_THROWS_AS(stanley_reisner_ideal(SimplicialComplex::void_complex(ctx, ctx->all())), ImproperIdealError);
  CHECK(stanley_reisner_complex(ideal(ctx, {"x*y*z"}), ctx->all()) == complex(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}}));
}

TEST_CASE("independence complexes") {
  const auto ctx = xyz();
  CHECK(complex_from_nonfaces(clutter(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}})) == complex(ctx, {{"x"}, {"y"}, {"z"}}));
  CHECK(complex_from_nonfaces(clutter(ctx, {{"x", "y"}, {"y", "z"}})) == complex(ctx, {{"x", "z"}, {"y"}}));
  const auto two = make_context({"x", "y"});
  CHECK(complex_from_nonfaces(Clutter::make(two, two->all(), {})) == complex(two, {{"x", "y"}}));
}

TEST_CASE("I(H) is the Stanley-Reisner ideal of the independence complex") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = random_clutter(rng, 6, 6);
    CHECK(stanley_reisner_ideal(complex_from_nonfaces(h)) == edge_ideal(h));
  }
}

TEST_CASE("Alexander dual complexes") {
  const auto ctx = xyz();
  CHECK(alexander_dual_complex(complex(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}})) ==
        SimplicialComplex::empty_face_only(ctx, ctx->all()));
  const auto delta = stanley_reisner_complex(ideal(ctx, {"x*y"}), ctx->all());
  CHECK(alexander_dual_complex(delta) == complex(ctx, {{"z"}}));
  const auto full = complex(ctx, {{"x", "y", "z"}});
  CHECK(alexander_dual_complex(full).is_void());
  CHECK(alexander_dual_complex(alexander_dual_complex(full)) == full);
}

TEST_CASE("duality is an involution and commutes with Stanley-Reisner ideals") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = 1 + trial % 8;
    const auto delta = random_complex(rng, n, 6);
    const auto dual = alexander_dual_complex(delta);
    CHECK(alexander_dual_complex(dual) == delta);
    if (dual.is_void()) continue;
    const auto i = stanley_reisner_ideal(delta);
    if (i.is_zero()) continue;
    CHECK(alexander_dual_ideal(i) == stanley_reisner_ideal(dual));
    CHECK(facet_complement_ideal(delta) == stanley_reisner_ideal(dual));
  }
}

TEST_CASE("Alexander dual ideals") {
  const auto ctx = xyz();
  CHECK(alexander_dual_ideal(ideal(ctx, {"x", "y"})) == ideal(ctx, {"x*y"}));
  CHECK(alexander_dual_ideal(ideal(ctx, {"x*y", "x*z", "y*z"})) == ideal(ctx, {"x*y", "x*z", "y*z"}));
  CHECK(alexander_dual_ideal(ideal(ctx, {"x*y", "y*z"})) == ideal(ctx, {"y", "x*z"}));
  CHECK_THROWS_AS(alexander_dual_ideal(ideal(ctx, {"x^2"})), NotSquarefreeError);
  CHECK_THROWS_AS(alexander_dual_ideal(MonomialIdeal(ctx)), ImproperIdealError);
}

TEST_CASE("Alexander dual ideals agree with brute-force prime intersection") {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto i = random_squarefree_ideal(rng, 1 + trial % 7, 6);
    std::vector<Monomial> expected;
    for (auto s : dual_by_membership(i)) expected.push_back(monomial_of_set(s, i.arity()));
    CHECK(alexander_dual_ideal(i) == MonomialIdeal::generated_by(i.context(), expected));
  }
}

TEST_CASE("links") {
  const auto ctx = xyz();
  const auto triangle = complex(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}});
  const auto lk = link(triangle, set(ctx, {"x"}));
  CHECK(lk.facets() == sets(ctx, {{"y"}, {"z"}}));
  CHECK(lk.ground() == set(ctx, {"y", "z"}));
  CHECK(link(triangle, VertexSet{}) == triangle);
  CHECK(link(complex(ctx, {{"x", "y", "z"}}), set(ctx, {"x", "y"})).facets() == sets(ctx, {{"z"}}));
  CHECK_THROWS_AS(link(triangle, ctx->all()), NotAFaceError);
}

TEST_CASE("link faces joined with the face are faces") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto delta = random_complex(rng, 6, 5);
    for (auto f : delta.faces()) {
      const auto lk = link(delta, f);
      for (auto g : lk.faces()) {
        CHECK_FALSE(g.intersects(f));
        CHECK(delta.contains_face(g | f));
      }
    }
  }
}

TEST_CASE("face deletion") {
  const auto ctx = xyz();
  const auto triangle = complex(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}});
  CHECK(delete_face(triangle, set(ctx, {"x"})).facets() == sets(ctx, {{"y", "z"}}));
  CHECK(delete_face(triangle, ctx->all()) == triangle);
  CHECK(delete_face(complex(ctx, {{"x", "y", "z"}}), set(ctx, {"y", "z"})).facets() ==
        sets(ctx, {{"x", "y"}, {"x", "z"}}));
  CHECK(delete_face(triangle, set(ctx, {"x"})).ground() == ctx->all());
  CHECK_THROWS_AS(delete_face(triangle, VertexSet{}), PreconditionError);
}

TEST_CASE("degenerate complexes") {
  const auto ctx = xyz();
  const auto v = SimplicialComplex::void_complex(ctx, ctx->all());
  const auto e = SimplicialComplex::empty_face_only(ctx, ctx->all());
  CHECK(v.is_void());
  CHECK(e.is_empty_face_only());
  CHECK(e.dimension() == -1);
  CHECK_THROWS_AS(v.dimension(), ConventionError);
  CHECK(to_string(v) == "{}");
  CHECK(to_string(e) == "<{}>");
  CHECK(to_string(complex(ctx, {{"y", "z"}, {"x"}})) == "<{x}, {y,z}>");
}

TEST_CASE("clutter construction") {
  const auto ctx = xyz();
  CHECK(clutter(ctx, {{"x", "y"}, {"x", "y", "z"}}).edges() == sets(ctx, {{"x", "y"}}));
  CHECK_THROWS_AS(clutter(ctx, {{"x"}}), PreconditionError);
  CHECK(Clutter::make(ctx, ctx->all(), sets(ctx, {{"x"}}), Clutter::EdgeRule::AllowSingletons).edges().size() == 1);
  CHECK_THROWS_AS(Clutter::make(ctx, ctx->all(), {VertexSet{}}, Clutter::EdgeRule::AllowSingletons),
                  ImproperContractionError);
}
