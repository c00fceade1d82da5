#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace kdecomp {

/// A subset of the variables of a context, stored as a 64-bit mask.
class VertexSet {
 public:
  using Mask = std::uint64_t;
  static constexpr std::size_t kMaxVertices = 64;

  class const_iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr const_iterator() noexcept = default;
    constexpr explicit const_iterator(Mask rest) noexcept : rest_(rest) {}

    constexpr std::size_t operator*() const noexcept { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr const_iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr const_iterator operator++(int) noexcept {
      auto old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(const_iterator, const_iterator) noexcept = default;

   private:
    Mask rest_ = 0;
  };

  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(Mask mask) noexcept : mask_(mask) {}
  VertexSet(std::initializer_list<std::size_t> vertices);

  static constexpr VertexSet singleton(std::size_t v) noexcept { return VertexSet(Mask{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet first(std::size_t n) noexcept {
    return VertexSet(n >= kMaxVertices ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool contains(std::size_t v) const noexcept { return v < kMaxVertices && ((mask_ >> v) & 1U) != 0; }
  constexpr bool is_subset_of(VertexSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(VertexSet other) const noexcept { return (mask_ & other.mask_) != 0; }
  /// Smallest element; undefined on the empty set.
  constexpr std::size_t front() const noexcept { return static_cast<std::size_t>(std::countr_zero(mask_)); }

  constexpr VertexSet with(std::size_t v) const noexcept { return VertexSet(mask_ | (Mask{1} << v)); }
  constexpr VertexSet without(std::size_t v) const noexcept { return VertexSet(mask_ & ~(Mask{1} << v)); }

  constexpr const_iterator begin() const noexcept { return const_iterator(mask_); }
  constexpr const_iterator end() const noexcept { return const_iterator(0); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.mask_ & b.mask_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;

 private:
  Mask mask_ = 0;
};

/// Order by cardinality, then lexicographically on the sorted element lists.
/// This is the enumeration order used for every tie-break in the library.
constexpr bool shortlex_less(VertexSet a, VertexSet b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  return (a.mask() & (diff & (~diff + 1))) != 0;
}

void sort_shortlex(std::vector<VertexSet>& sets);

/// Inclusion-maximal members, deduplicated, in shortlex order.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets);

/// Inclusion-minimal members, deduplicated, in shortlex order.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets);

/// Minimal sets meeting every member of `family`. An empty member admits no
/// transversal; the empty family has the single transversal {}.
std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> family);

/// All subsets of `s`, in increasing mask order.
std::vector<VertexSet> subsets_of(VertexSet s);

}  // namespace kdecomp

template <>
struct std::hash<kdecomp::VertexSet> {
  std::size_t operator()(kdecomp::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.mask()); }
};
