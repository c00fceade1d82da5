#pragma once

// Exhaustive enumeration of small complexes, graphs and clutters. Complexes
// and graphs are listed up to isomorphism (the smallest mask in each orbit);
// clutters are listed with labels.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "kdecomp/clutter.hpp"
#include "kdecomp/simplicial_complex.hpp"

namespace kdecomp::testing {

/// Applies vertex permutations to bitmasks indexed by some family of vertex
/// subsets, via one 256-entry table per byte of the mask.
class MaskPermuter {
 public:
  /// `image[p][b]` is the bit that bit b moves to under permutation p.
  explicit MaskPermuter(const std::vector<std::vector<int>>& image) {
    for (const auto& bits : image) {
      Tables t{};
      for (std::size_t chunk = 0; chunk < 8; ++chunk) {
        for (std::uint32_t byte = 0; byte < 256; ++byte) {
          std::uint64_t out = 0;
          for (std::size_t k = 0; k < 8; ++k) {
            const auto b = chunk * 8 + k;
            if (((byte >> k) & 1U) && b < bits.size()) out |= std::uint64_t{1} << bits[b];
          }
          t[chunk][byte] = out;
        }
      }
      tables_.push_back(t);
    }
    chunks_ = image.empty() ? 0 : (image.front().size() + 7) / 8;
  }

  /// True iff no permutation maps `mask` to a smaller mask.
  bool is_orbit_minimum(std::uint64_t mask) const {
    for (const auto& t : tables_) {
      std::uint64_t out = 0;
      for (std::size_t c = 0; c < chunks_; ++c) out |= t[c][(mask >> (8 * c)) & 0xFF];
      if (out < mask) return false;
    }
    return true;
  }

 private:
  using Tables = std::array<std::array<std::uint64_t, 256>, 8>;
  std::vector<Tables> tables_;
  std::size_t chunks_ = 0;
};

inline std::vector<std::vector<int>> permutations(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Face masks (bit s set iff subset s of {0..n-1} is a face) of all complexes
/// on n <= 6 points up to relabeling, including the void complex (0) and {emptyset} (1).
inline std::vector<std::uint64_t> complex_classes(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<int>> image;
  for (const auto& p : permutations(n)) {
    std::vector<int> bits(subsets);
    for (std::size_t s = 0; s < subsets; ++s) {
      std::size_t t = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if ((s >> v) & 1U) t |= std::size_t{1} << p[v];
      }
      bits[s] = static_cast<int>(t);
    }
    image.push_back(std::move(bits));
  }
  const MaskPermuter permuter(image);
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::uint64_t)> grow = [&](std::size_t s, std::uint64_t mask) {
    if (s == subsets) {
      if (permuter.is_orbit_minimum(mask)) out.push_back(mask);
      return;
    }
    grow(s + 1, mask);
    bool closed = s == 0 || (mask & 1U);
    for (std::size_t v = 0; v < n && closed; ++v) {
      if ((s >> v) & 1U) closed = (mask >> (s & ~(std::size_t{1} << v))) & 1U;
    }
    if (closed) grow(s + 1, mask | (std::uint64_t{1} << s));
  };
  grow(0, 0);
  return out;
}

inline SimplicialComplex complex_from_mask(std::uint64_t mask, const ContextPtr& ctx) {
  std::vector<VertexSet> faces;
  for (std::size_t s = 0; s < 64; ++s) {
    if ((mask >> s) & 1U) faces.emplace_back(std::uint64_t{s});
  }
  return SimplicialComplex::generated_by(ctx, ctx->all(), std::move(faces));
}

/// Edge masks over the pairs (i < j) in lex order of all graphs on n <= 7
/// vertices up to relabeling.
inline std::vector<std::uint32_t> graph_classes(std::size_t n, std::vector<std::pair<int, int>>& pairs) {
  pairs.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::vector<std::vector<int>> image;
  for (const auto& p : permutations(n)) {
    std::vector<int> bits(pairs.size());
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      auto a = p[pairs[e].first];
      auto b = p[pairs[e].second];
      if (a > b) std::swap(a, b);
      bits[e] = static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
    }
    image.push_back(std::move(bits));
  }
  const MaskPermuter permuter(image);
  std::vector<std::uint32_t> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    if (permuter.is_orbit_minimum(m)) out.push_back(static_cast<std::uint32_t>(m));
  }
  return out;
}

/// Every clutter on the vertex set {0..n-1} whose edges have size >= 2.
inline std::vector<std::vector<VertexSet>> all_clutters(std::size_t n) {
  std::vector<VertexSet> candidates;
  for (auto s : subsets_of(VertexSet::first(n))) {
    if (s.size() >= 2) candidates.push_back(s);
  }
  std::vector<std::vector<VertexSet>> out;
  std::vector<VertexSet> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t i) {
    if (i == candidates.size()) {
      out.push_back(chosen);
      return;
    }
    grow(i + 1);
    const auto c = candidates[i];
    const bool free = std::none_of(chosen.begin(), chosen.end(),
                                   [c](VertexSet e) { return e.is_subset_of(c) || c.is_subset_of(e); });
    if (free) {
      chosen.push_back(c);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return out;
}

}  // namespace kdecomp::testing
