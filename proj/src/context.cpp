#include "kdecomp/context.hpp"

#include <algorithm>
#include <unordered_set>

#include "kdecomp/errors.hpp"

namespace kdecomp {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > VertexSet::kMaxVertices) {
    throw PreconditionError("at most 64 variables are supported, got " + std::to_string(names_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw PreconditionError("variable names must be nonempty");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

ContextPtr indexed_context(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_context(std::move(names));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw ContextMismatch("objects live over different variable contexts");
}

std::string format_set(VertexSet s, const VariableContext& ctx) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ',';
    out += ctx.name(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace kdecomp
