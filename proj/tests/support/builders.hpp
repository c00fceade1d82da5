#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "kdecomp/clutter.hpp"
#include "kdecomp/io.hpp"
#include "kdecomp/monomial_ideal.hpp"
#include "kdecomp/simplicial_complex.hpp"

namespace kdecomp::testing {

inline ContextPtr xyz() { return make_context({"x", "y", "z"}); }
inline ContextPtr xyzw() { return make_context({"x", "y", "z", "w"}); }

inline Monomial mono(const ContextPtr& ctx, const std::string& text) { return parse_monomial(text, *ctx); }

inline VertexSet set(const ContextPtr& ctx, std::initializer_list<const char*> names) {
  VertexSet out;
  for (const auto* name : names) out = out.with(*ctx->index_of(name));
  return out;
}

inline MonomialIdeal ideal(const ContextPtr& ctx, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const auto* g : gens) ms.push_back(mono(ctx, g));
  return MonomialIdeal::generated_by(ctx, std::move(ms));
}

inline std::vector<VertexSet> sets(const ContextPtr& ctx,
                                   std::initializer_list<std::initializer_list<const char*>> lists) {
  std::vector<VertexSet> out;
  for (auto list : lists) out.push_back(set(ctx, list));
  return out;
}

inline SimplicialComplex complex(const ContextPtr& ctx,
                                 std::initializer_list<std::initializer_list<const char*>> facets) {
  return SimplicialComplex::generated_by(ctx, ctx->all(), sets(ctx, facets));
}

inline Clutter clutter(const ContextPtr& ctx, std::initializer_list<std::initializer_list<const char*>> edges) {
  return Clutter::make(ctx, ctx->all(), sets(ctx, edges));
}

}  // namespace kdecomp::testing
