#include "doctest.h"

#include "kdecomp/clutters.hpp"
#include "kdecomp/errors.hpp"
#include "kdecomp/sampling.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace kdecomp;
using namespace kdecomp::testing;

namespace {

Clutter minor_clutter(const ContextPtr& ctx, VertexSet vertices,
                      std::initializer_list<std::initializer_list<const char*>> edges) {
  return Clutter::make(ctx, vertices, sets(ctx, edges), Clutter::EdgeRule::AllowSingletons);
}

}  // namespace

TEST_CASE("deletion") {
  const auto ctx = xyzw();
  const auto triangle = Clutter::make(ctx, set(ctx, {"x", "y", "z"}), sets(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}}));
  CHECK(deletion(triangle, 0).edges() == sets(ctx, {{"y", "z"}}));
  const auto path = Clutter::make(ctx, set(ctx, {"x", "y", "z"}), sets(ctx, {{"x", "y"}, {"y", "z"}}));
  const auto cut = deletion(path, 1);
  CHECK(cut.is_edgeless());
  CHECK(cut.vertices() == set(ctx, {"x", "z"}));
  const auto h = clutter(ctx, {{"x", "y", "z"}, {"x", "y", "w"}});
  CHECK(deletion(h, 3).edges() == sets(ctx, {{"x", "y", "z"}}));
  CHECK_THROWS_AS(deletion(cut, 1), UnknownVertexError);
}

TEST_CASE("contraction") {
  const auto ctx = xyzw();
  const auto triangle = Clutter::make(ctx, set(ctx, {"x", "y", "z"}), sets(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}}));
  CHECK(contraction(triangle, 0).edges() == sets(ctx, {{"y"}, {"z"}}));
  const auto h = clutter(ctx, {{"x", "y", "z"}, {"x", "y", "w"}});
  CHECK(contraction(h, 0).edges() == sets(ctx, {{"y", "z"}, {"y", "w"}}));
  const auto edgeless = Clutter::make(ctx, ctx->all(), {});
  CHECK(contraction(edgeless, 2).is_edgeless());
  CHECK_THROWS_AS(contraction(contraction(triangle, 0), 1), ImproperContractionError);
}

TEST_CASE("contraction by a set") {
  const auto ctx = xyzw();
  const auto h = clutter(ctx, {{"x", "y", "z"}, {"x", "y", "w"}});
  CHECK(contraction_set(h, set(ctx, {"x", "y"})).edges() == sets(ctx, {{"z"}, {"w"}}));
  CHECK(contraction_set(h, VertexSet{}) == h);
  const auto three = xyz();
  const auto triangle = clutter(three, {{"x", "y"}, {"x", "z"}, {"y", "z"}});
  CHECK(contraction_set(triangle, set(three, {"y"})).edges() == sets(three, {{"x"}, {"z"}}));
  CHECK_THROWS_AS(contraction_set(triangle, set(three, {"x", "y"})), ImproperContractionError);
}

TEST_CASE("contraction by a set does not depend on the order") {
  Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = random_clutter(rng, 6, 5);
    const auto s = VertexSet(std::uniform_int_distribution<std::uint64_t>(0, 63)(rng));
    if (std::any_of(h.edges().begin(), h.edges().end(), [s](VertexSet e) { return e.is_subset_of(s); })) continue;
    std::vector<std::size_t> order(s.begin(), s.end());
    std::reverse(order.begin(), order.end());
    Clutter reversed = h;
    for (auto v : order) reversed = contraction(reversed, v);
    CHECK(reversed == contraction_set(h, s));
  }
}

TEST_CASE("simplicial vertices and containment pairs") {
  const auto ctx = xyzw();
  const auto triangle = Clutter::make(ctx, set(ctx, {"x", "y", "z"}), sets(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}}));
  CHECK(is_simplicial_vertex(triangle, 0));
  const auto h = clutter(ctx, {{"x", "y", "z"}, {"x", "y", "w"}});
  CHECK_FALSE(is_simplicial_vertex(h, 0));
  CHECK(is_simplicial_vertex(h, 2));

  CHECK(is_containment_pair(triangle, 0, set(ctx, {"x", "y"})));
  CHECK(is_containment_pair(h, 2, set(ctx, {"x", "y", "z"})));
  CHECK_FALSE(is_containment_pair(h, 0, set(ctx, {"x", "y", "z"})));
  CHECK_THROWS_AS(is_containment_pair(h, 3, set(ctx, {"x", "y", "z"})), PreconditionError);
}

TEST_CASE("a simplicial vertex forms a containment pair with each of its edges") {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = random_clutter(rng, 6, 6);
    for (auto x : h.vertices()) {
      if (!is_simplicial_vertex(h, x)) continue;
      for (auto e : h.edges_containing(x)) CHECK(is_containment_pair(h, x, e));
    }
  }
}

TEST_CASE("chordality") {
  const auto ctx = xyzw();
  const auto triangle = Clutter::make(ctx, set(ctx, {"x", "y", "z"}), sets(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}}));
  CHECK(is_chordal(triangle).verdict == Verdict::Yes);

  const auto square = clutter(ctx, {{"x", "y"}, {"y", "z"}, {"z", "w"}, {"x", "w"}});
  const auto result = is_chordal(square);
  REQUIRE(result.verdict == Verdict::No);
  REQUIRE(result.witness);
  CHECK(result.witness->empty());
  CHECK(replay(square, *result.witness) == square);

  CHECK(is_chordal(Clutter::make(ctx, ctx->all(), {})).verdict == Verdict::Yes);
  CHECK(is_chordal(square, {.max_vertices = 3}).verdict == Verdict::Undecided);
  CHECK(is_chordal(square, {.max_vertices = 16, .node_limit = 0}).verdict == Verdict::Undecided);
}

TEST_CASE("chordality witnesses replay to minors without simplicial vertices") {
  Rng rng(57);
  int rejected = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = random_uniform_clutter(rng, 6, 2 + trial % 2, 0.4);
    const auto result = is_chordal(h);
    REQUIRE(result.verdict != Verdict::Undecided);
    if (result.verdict == Verdict::Yes) continue;
    ++rejected;
    const auto minor = replay(h, *result.witness);
    CHECK_FALSE(minor.vertices().empty());
    for (auto v : minor.vertices()) CHECK_FALSE(is_simplicial_vertex(minor, v));
  }
  CHECK(rejected > 10);
}

TEST_CASE("minors of chordal clutters are chordal") {
  Rng rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_uniform_clutter(rng, 5, 2 + trial % 2, 0.5);
    if (is_chordal(h).verdict != Verdict::Yes) continue;
    for (auto v : h.vertices()) {
      CHECK(is_chordal(deletion(h, v)).verdict == Verdict::Yes);
      if (!h.has_edge(VertexSet::singleton(v))) CHECK(is_chordal(contraction(h, v)).verdict == Verdict::Yes);
    }
  }
}

TEST_CASE("graph chordality agrees with the induced-cycle check on random graphs") {
  Rng rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = random_uniform_clutter(rng, 7, 2, 0.35);
    Graph g{7, std::vector<std::uint32_t>(7, 0)};
    for (auto e : h.edges()) {
      const auto a = e.front();
      const auto b = e.without(a).front();
      g.adj[a] |= 1U << b;
      g.adj[b] |= 1U << a;
    }
    CHECK((is_chordal(h).verdict == Verdict::Yes) == chordal_by_induced_cycles(g));
  }
}

TEST_CASE("edge ideals") {
  const auto ctx = xyz();
  CHECK(edge_ideal(clutter(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}})) == ideal(ctx, {"x*y", "x*z", "y*z"}));
  CHECK(edge_ideal(Clutter::make(ctx, ctx->all(), {})).is_zero());
  CHECK(edge_ideal(minor_clutter(ctx, ctx->all(), {{"y"}, {"x", "z"}})) == ideal(ctx, {"y", "x*z"}));
}

TEST_CASE("ideals of the deletion and the link of e - x") {
  const auto ctx = xyz();
  const auto triangle = clutter(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}});
  auto h = lemma_h_ideals(triangle, set(ctx, {"x", "y"}), 0);
  CHECK(h.deletion == ideal(ctx, {"y", "x*z"}));
  CHECK(h.link == ideal(ctx, {"x", "z"}));

  const auto four = xyzw();
  h = lemma_h_ideals(clutter(four, {{"x", "y", "z"}, {"x", "y", "w"}}), set(four, {"x", "y", "z"}), 2);
  CHECK(h.deletion == ideal(four, {"x*y"}));
  CHECK(h.link == ideal(four, {"z", "w"}));

  h = lemma_h_ideals(clutter(ctx, {{"x", "y"}, {"y", "z"}}), set(ctx, {"x", "y"}), 0);
  CHECK(h.deletion == ideal(ctx, {"y"}));
  CHECK(h.link == ideal(ctx, {"x", "z"}));

  const auto singleton = minor_clutter(ctx, ctx->all(), {{"x"}, {"y", "z"}});
  CHECK_THROWS_AS(lemma_h_ideals(singleton, set(ctx, {"x"}), 0), PreconditionError);
  CHECK_THROWS_AS(lemma_h_ideals(triangle, set(ctx, {"x", "y"}), 2), PreconditionError);
}

TEST_CASE("both sides of the deletion/link ideal identities agree on random clutters") {
  Rng rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = random_clutter(rng, 2 + trial % 5, 5);
    for (auto e : h.edges()) {
      for (auto x : e) CHECK_NOTHROW(lemma_h_ideals(h, e, x));
    }
  }
}

TEST_CASE("regularity at a simplicial vertex") {
  const auto ctx = xyz();
  auto r = chordal_reg_bound(clutter(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}}), 0, set(ctx, {"x", "y"}));
  CHECK(r.d == 1);
  CHECK(r.reg == 1);
  CHECK(r.reg_with_face == 1);
  CHECK(r.reg_contraction == 0);
  CHECK(r.equality_rhs == 1);
  CHECK(r.deletion_sum == 1);
  CHECK(r.bound_rhs == 1);
  CHECK(r.minors_chordal == true);

  const auto four = xyzw();
  r = chordal_reg_bound(clutter(four, {{"x", "y", "z"}, {"x", "y", "w"}}), 2, set(four, {"x", "y", "z"}));
  CHECK(r.d == 2);
  CHECK(r.reg == 2);
  CHECK(r.reg_with_face == 1);
  CHECK(r.reg_contraction == 0);
  CHECK(r.equality_rhs == 2);
  CHECK(r.deletion_sum == 1);
  CHECK(r.bound_rhs == 2);

  const auto two = make_context({"x", "y"});
  r = chordal_reg_bound(clutter(two, {{"x", "y"}}), 0, set(two, {"x", "y"}));
  CHECK(r.reg == 1);
  CHECK(r.reg_with_face == 0);
  CHECK(r.equality_rhs == 1);
  CHECK_FALSE(r.minors_chordal == std::nullopt);

  r = chordal_reg_bound(clutter(two, {{"x", "y"}}), 0, set(two, {"x", "y"}), {}, false);
  CHECK_FALSE(r.minors_chordal.has_value());

  CHECK_THROWS_AS(chordal_reg_bound(clutter(four, {{"x", "y", "z"}, {"x", "y", "w"}}), 0, set(four, {"x", "y", "z"})),
                  PreconditionError);
}

TEST_CASE("minor traces") {
  const auto ctx = xyz();
  const MinorTrace trace{{MinorStep::Kind::Delete, 0}, {MinorStep::Kind::Contract, 2}};
  CHECK(to_string(trace, *ctx) == "d:x,c:z");
  CHECK(parse_minor_trace("d:x,c:z", *ctx) == trace);
  CHECK(parse_minor_trace("delete:x, contract:z", *ctx) == trace);
  CHECK_THROWS_AS(parse_minor_trace("d:q", *ctx), UnknownVertexError);
  CHECK_THROWS_AS(parse_minor_trace("x", *ctx), PreconditionError);
  const auto triangle = clutter(ctx, {{"x", "y"}, {"x", "z"}, {"y", "z"}});
  CHECK(replay(triangle, trace).edges() == sets(ctx, {{"y"}}));
}
