#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdecomp/vertex_set.hpp"

namespace kdecomp {

/// The ordered variables x_1, ..., x_n of the polynomial ring. Variable order
/// drives every lexicographic tie-break, so it is part of the input contract.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  VertexSet all() const noexcept { return VertexSet::first(names_.size()); }

  friend bool operator==(const VariableContext&, const VariableContext&) = default;

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names);

/// Context with variables x1, ..., xn.
ContextPtr indexed_context(std::size_t n);

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept;

/// Throws ContextMismatch unless both pointers denote the same variables.
void require_same_context(const ContextPtr& a, const ContextPtr& b);

/// "{x,y}" in variable order; "{}" for the empty set.
std::string format_set(VertexSet s, const VariableContext& ctx);

}  // namespace kdecomp
