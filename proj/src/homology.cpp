#include "kdecomp/homology.hpp"

#include <algorithm>

#include "kdecomp/errors.hpp"
#include "kdecomp/linear_algebra.hpp"

namespace kdecomp {

Eigen::Index rank_mod_p(DenseMatrix<std::int64_t> m, std::int64_t p) {
  auto reduce = [p](std::int64_t v) { return ((v % p) + p) % p; };
  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1;
    std::int64_t e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  m = m.unaryExpr(reduce);
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    const auto inv = inverse(m(rank, c));
    for (Eigen::Index j = c; j < cols; ++j) m(rank, j) = m(rank, j) * inv % p;
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const auto factor = m(r, c);
      if (factor == 0) continue;
      for (Eigen::Index j = c; j < cols; ++j) m(r, j) = reduce(m(r, j) - factor * m(rank, j));
    }
    ++rank;
  }
  return rank;
}

Eigen::Index rank_rational(const DenseMatrix<std::int64_t>& m) {
  try {
    return rank_fraction_free<CheckedInt64>(m.cast<CheckedInt64>());
  } catch (const ArithmeticOverflow&) {
    return rank_fraction_free<BigInt>(m.cast<BigInt>());
  }
}

Field Field::prime(std::uint32_t p) {
  if (p < 2 || p >= (1U << 31)) throw PreconditionError("field characteristic must be a prime below 2^31");
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field{p};
}

std::vector<std::size_t> ChainComplexSummary::reduced_homology() const {
  std::vector<std::size_t> out(face_counts.size());
  for (std::size_t i = 0; i < face_counts.size(); ++i) {
    out[i] = face_counts[i] - boundary_ranks[i] - boundary_ranks[i + 1];
  }
  return out;
}

long long ChainComplexSummary::reduced_euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < face_counts.size(); ++i) {
    // index i is dimension i - 1
    const auto f = static_cast<long long>(face_counts[i]);
    chi += (i % 2 == 1) ? f : -f;
  }
  return chi;
}

ChainComplexSummary summarize_chain_complex(std::span<const VertexSet> faces, Field field) {
  std::vector<std::vector<VertexSet::Mask>> by_size;
  for (auto f : faces) {
    if (by_size.size() <= f.size()) by_size.resize(f.size() + 1);
    by_size[f.size()].push_back(f.mask());
  }
  for (auto& level : by_size) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }

  ChainComplexSummary out;
  out.face_counts.reserve(by_size.size());
  for (const auto& level : by_size) out.face_counts.push_back(level.size());
  out.boundary_ranks.assign(by_size.size() + 1, 0);

  // boundary_ranks[s] is the rank of the map from faces of size s to size s-1.
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    const auto& lower = by_size[s - 1];
    const auto& upper = by_size[s];
    if (lower.empty() || upper.empty()) continue;
    DenseMatrix<std::int64_t> boundary = DenseMatrix<std::int64_t>::Zero(
        static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(upper.size()));
    for (std::size_t col = 0; col < upper.size(); ++col) {
      std::int64_t sign = 1;
      for (auto v : VertexSet(upper[col])) {
        const auto facet = upper[col] & ~(VertexSet::Mask{1} << v);
        auto it = std::lower_bound(lower.begin(), lower.end(), facet);
        if (it == lower.end() || *it != facet) throw PreconditionError("face family is not closed under subsets");
        boundary(it - lower.begin(), static_cast<Eigen::Index>(col)) = sign;
        sign = -sign;
      }
    }
    const auto rank = field.is_rational() ? rank_rational(boundary) : rank_mod_p(boundary, field.characteristic);
    out.boundary_ranks[s] = static_cast<std::size_t>(rank);
  }
  return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet w) {
  if (complex.is_void()) return SimplicialComplex::void_complex(complex.context(), w & complex.ground());
  std::vector<VertexSet> faces;
  for (auto f : complex.facets()) faces.push_back(f & w);
  return SimplicialComplex::generated_by(complex.context(), w, std::move(faces));
}

std::vector<std::size_t> reduced_homology_dims(std::span<const VertexSet> faces, Field field) {
  VertexSet used;
  for (auto f : faces) used = used | f;
  if (used.size() > kOracleMaxVertices) throw BudgetExceededError("homology oracle is limited to 20 vertices");
  const auto summary = summarize_chain_complex(faces, field);
  auto h = summary.reduced_homology();
  long long alternating = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    alternating += (i % 2 == 1) ? static_cast<long long>(h[i]) : -static_cast<long long>(h[i]);
  }
  if (alternating != summary.reduced_euler_characteristic()) {
    throw InternalError("homology ranks disagree with the reduced Euler characteristic");
  }
  return h;
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, Field field) {
  if (complex.vertices().size() > kOracleMaxVertices) {
    throw BudgetExceededError("homology oracle is limited to 20 vertices");
  }
  const auto faces = complex.faces();
  return reduced_homology_dims(faces, field);
}

BettiTable betti_hochster(const MonomialIdeal& ideal, Field field) {
  if (!ideal.is_squarefree()) throw NotSquarefreeError("Hochster's formula needs a squarefree ideal");
  if (ideal.is_zero()) throw ConventionError("the zero ideal has no Betti table");
  VertexSet x;
  for (const auto& g : ideal.generators()) x = x | support(g);
  if (x.size() > kOracleMaxVertices) throw BudgetExceededError("Hochster oracle is limited to 20 variables");

  const auto complex = stanley_reisner_complex(ideal, x);
  const auto all_faces = complex.faces();
  BettiTable table(true);
  std::vector<VertexSet> faces;
  for (auto w : subsets_of(x)) {
    if (w.empty() || complex.contains_face(w)) continue;  // cones have no reduced homology
    faces.clear();
    for (auto f : all_faces) {
      if (f.is_subset_of(w)) faces.push_back(f);
    }
    const auto h = reduced_homology_dims(faces, field);
    const int j = static_cast<int>(w.size());
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
      if (h[idx] == 0) continue;
      const int d = static_cast<int>(idx) - 1;
      const int i = j - d - 2;
      if (i >= 0) table.add(i, j, h[idx]);
    }
  }
  return table;
}

BettiTable betti_koszul(const MonomialIdeal& ideal, Field field) {
  if (ideal.is_zero()) throw ConventionError("the zero ideal has no Betti table");
  const auto top = ideal.lcm_of_generators();
  if (top.degree() > kOracleMaxLcmDegree) throw BudgetExceededError("Koszul oracle is limited to lcm degree 24");
  if (support(top).size() > kOracleMaxVertices) throw BudgetExceededError("Koszul oracle is limited to 20 variables");

  const std::size_t n = ideal.arity();
  const auto gens = ideal.generators();
  auto in_ideal = [&](const std::vector<int>& e) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      for (std::size_t t = 0; t < n; ++t) {
        if (g[t] > e[t]) return false;
      }
      return true;
    });
  };

  BettiTable table(true);
  std::vector<int> a(n, 0);
  std::vector<VertexSet> faces;
  std::vector<int> shifted(n);
  while (true) {
    if (in_ideal(a)) {
      VertexSet supp;
      int degree = 0;
      for (std::size_t t = 0; t < n; ++t) {
        if (a[t] > 0) supp = supp.with(t);
        degree += a[t];
      }
      faces.clear();
      for (auto s : subsets_of(supp)) {
        for (std::size_t t = 0; t < n; ++t) shifted[t] = a[t] - (s.contains(t) ? 1 : 0);
        if (in_ideal(shifted)) faces.push_back(s);
      }
      const auto h = reduced_homology_dims(faces, field);
      for (std::size_t idx = 0; idx < h.size(); ++idx) {
        if (h[idx] != 0) table.add(static_cast<int>(idx), degree, h[idx]);
      }
    }
    std::size_t t = 0;
    while (t < n && a[t] == top[t]) a[t++] = 0;
    if (t == n) break;
    ++a[t];
  }
  return table;
}

BettiTable oracle_betti(const MonomialIdeal& ideal, Field field) {
  return ideal.is_squarefree() ? betti_hochster(ideal, field) : betti_koszul(ideal, field);
}

QuotientInvariants oracle_quotient_invariants(const MonomialIdeal& ideal, Field field) {
  if (ideal.is_zero()) return {0, 0, true};
  return quotient_invariants(invariants_from_betti(oracle_betti(ideal, field)));
}

}  // namespace kdecomp
