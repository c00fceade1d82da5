#include "kdecomp/clutter.hpp"

#include <algorithm>

#include "kdecomp/errors.hpp"

namespace kdecomp {

Clutter::Clutter(ContextPtr ctx, VertexSet vertices, std::vector<VertexSet> edges)
    : ctx_(std::move(ctx)), vertices_(vertices), edges_(std::move(edges)) {}

Clutter Clutter::make(ContextPtr ctx, VertexSet vertices, std::vector<VertexSet> edges, EdgeRule rule) {
  if (!ctx) throw PreconditionError("clutter needs a variable context");
  if (!vertices.is_subset_of(ctx->all())) throw UnknownVertexError("clutter vertices lie outside the context");
  for (auto e : edges) {
    if (!e.is_subset_of(vertices)) throw UnknownVertexError("edge uses a vertex outside the clutter");
    if (e.empty()) throw ImproperContractionError("clutters cannot contain the empty edge");
    if (rule == EdgeRule::AtLeastTwo && e.size() < 2) {
      throw PreconditionError("clutter edges must have at least two vertices");
    }
  }
  return Clutter(std::move(ctx), vertices, minimal_sets(std::move(edges)));
}

bool Clutter::has_edge(VertexSet e) const noexcept {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<VertexSet> Clutter::edges_containing(std::size_t v) const {
  std::vector<VertexSet> out;
  for (auto e : edges_) {
    if (e.contains(v)) out.push_back(e);
  }
  return out;
}

std::string to_string(const Clutter& clutter) {
  std::string out = "{";
  bool first = true;
  for (auto e : clutter.edges()) {
    if (!first) out += ", ";
    out += format_set(e, *clutter.context());
    first = false;
  }
  out += "} on " + format_set(clutter.vertices(), *clutter.context());
  return out;
}

}  // namespace kdecomp
