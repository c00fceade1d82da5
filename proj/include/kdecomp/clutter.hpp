#pragma once

#include <string>
#include <vector>

#include "kdecomp/context.hpp"
#include "kdecomp/vertex_set.hpp"

namespace kdecomp {

/// A hypergraph on `vertices` whose edges are pairwise incomparable.
///
/// Clutters built from user input require |e| >= 2. Contraction can produce
/// singleton edges, so minors are built with EdgeRule::AllowSingletons.
class Clutter {
 public:
  enum class EdgeRule { AtLeastTwo, AllowSingletons };

  /// Keeps the inclusion-minimal members of `edges`.
  static Clutter make(ContextPtr ctx, VertexSet vertices, std::vector<VertexSet> edges,
                      EdgeRule rule = EdgeRule::AtLeastTwo);

  const ContextPtr& context() const noexcept { return ctx_; }
  VertexSet vertices() const noexcept { return vertices_; }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  bool is_edgeless() const noexcept { return edges_.empty(); }
  bool has_edge(VertexSet e) const noexcept;
  std::vector<VertexSet> edges_containing(std::size_t v) const;

  friend bool operator==(const Clutter& a, const Clutter& b) {
    return same_context(a.ctx_, b.ctx_) && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  Clutter(ContextPtr ctx, VertexSet vertices, std::vector<VertexSet> edges);

  ContextPtr ctx_;
  VertexSet vertices_;
  std::vector<VertexSet> edges_;
};

std::string to_string(const Clutter& clutter);

}  // namespace kdecomp
