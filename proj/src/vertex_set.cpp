#include "kdecomp/vertex_set.hpp"

#include <algorithm>

namespace kdecomp {

VertexSet::VertexSet(std::initializer_list<std::size_t> vertices) {
  for (auto v : vertices) mask_ |= Mask{1} << v;
}

void sort_shortlex(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end(), shortlex_less); }

std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
  sort_shortlex(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  // Larger sets come later, so a set is maximal iff no later set contains it.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = i + 1; j < sets.size() && !dominated; ++j) {
      dominated = sets[i].is_subset_of(sets[j]);
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  sort_shortlex(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (auto s : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(), [s](VertexSet kept) { return kept.is_subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> family) {
  std::vector<VertexSet> current{VertexSet{}};
  for (auto member : family) {
    if (member.empty()) return {};
    std::vector<VertexSet> next;
    next.reserve(current.size() * member.size());
    for (auto t : current) {
      if (t.intersects(member)) {
        next.push_back(t);
      } else {
        for (auto v : member) next.push_back(t.with(v));
      }
    }
    current = minimal_sets(std::move(next));
  }
  return current;
}

std::vector<VertexSet> subsets_of(VertexSet s) {
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << s.size());
  // Standard submask walk, collected in increasing order.
  VertexSet::Mask sub = 0;
  do {
    out.emplace_back(sub);
    sub = (sub - s.mask()) & s.mask();
  } while (sub != 0);
  return out;
}

}  // namespace kdecomp
