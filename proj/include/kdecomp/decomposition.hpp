#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "kdecomp/monomial_ideal.hpp"
#include "kdecomp/simplicial_complex.hpp"
#include "kdecomp/verdict.hpp"

namespace kdecomp {

/// Passing kAnyK as k lifts the bound on the size of shedding supports/faces.
inline constexpr int kAnyK = -1;

/// [u, M] = 1, i.e. no x_i^{a_i} with x_i in supp(u) divides M.
/// Throws PreconditionError for u = 1.
bool matches(const Monomial& u, const Monomial& m);

/// G(I) partitioned by the shedding predicate.
struct IdealSplit {
  MonomialIdeal deletion;  ///< I^u = (M in G(I) : [u,M] != 1)
  MonomialIdeal link;      ///< I_u = (M in G(I) : [u,M] = 1)
};

IdealSplit split(const MonomialIdeal& ideal, const Monomial& u);

/// I_u != 0 and for each M_i in G(I_u), x_l in supp(u) some M_j in G(I^u)
/// has M_j : M_i = x_l.
bool is_shedding_monomial(const MonomialIdeal& ideal, const Monomial& u);
bool is_shedding_monomial(std::span<const Monomial> generators, const Monomial& u);

/// Tree of shedding splits witnessing that an ideal is k-decomposable.
class IdealCertificate {
 public:
  struct Leaf {
    Monomial generator;
  };
  struct Split {
    Monomial shedding;
    std::shared_ptr<const IdealCertificate> deletion;  ///< certificate for I^u
    std::shared_ptr<const IdealCertificate> link;      ///< certificate for I_u
  };

  explicit IdealCertificate(Leaf leaf) : node_(std::move(leaf)) {}
  explicit IdealCertificate(Split split) : node_(std::move(split)) {}

  bool is_leaf() const noexcept { return std::holds_alternative<Leaf>(node_); }
  const Leaf& leaf() const { return std::get<Leaf>(node_); }
  const Split& split() const { return std::get<Split>(node_); }

  std::size_t leaf_count() const;
  /// Leaf generators, deletion subtree first.
  std::vector<Monomial> generators() const;
  /// Largest |supp(u)| over the splits; 0 for a leaf.
  std::size_t max_support() const;

 private:
  std::variant<Leaf, Split> node_;
};

using IdealCertificatePtr = std::shared_ptr<const IdealCertificate>;

/// Tree of shedding faces witnessing that a complex is k-decomposable.
class ComplexCertificate {
 public:
  struct Leaf {
    std::optional<VertexSet> facet;  ///< nullopt for the void complex
  };
  struct Split {
    VertexSet face;
    std::shared_ptr<const ComplexCertificate> deletion;  ///< certificate for Delta \ sigma
    std::shared_ptr<const ComplexCertificate> link;      ///< certificate for lk(sigma)
  };

  explicit ComplexCertificate(Leaf leaf) : node_(std::move(leaf)) {}
  explicit ComplexCertificate(Split split) : node_(std::move(split)) {}

  bool is_leaf() const noexcept { return std::holds_alternative<Leaf>(node_); }
  const Leaf& leaf() const { return std::get<Leaf>(node_); }
  const Split& split() const { return std::get<Split>(node_); }

  friend bool operator==(const ComplexCertificate& a, const ComplexCertificate& b);

 private:
  std::variant<Leaf, Split> node_;
};

using ComplexCertificatePtr = std::shared_ptr<const ComplexCertificate>;

struct SearchOptions {
  int k = kAnyK;
  /// Maximum number of distinct subproblems expanded before giving up.
  std::size_t node_limit = 1'000'000;
};

struct IdealDecision {
  Verdict verdict = Verdict::Undecided;
  IdealCertificatePtr certificate;  ///< set iff verdict == Yes
  std::size_t nodes = 0;
};

struct ComplexDecision {
  Verdict verdict = Verdict::Undecided;
  ComplexCertificatePtr certificate;
  std::size_t nodes = 0;
};

/// Memoized search for k-decomposition certificates of monomial ideals.
///
/// Candidates u use, for each variable, only the exponents that occur in the
/// current generators; they are tried by support (size, then lex) and then by
/// exponent vector, and the first u whose two halves decompose is committed.
/// The memo persists across decide() calls on the same object; the node
/// budget applies to each call separately.
class IdealSearch {
 public:
  explicit IdealSearch(SearchOptions options = {}) : options_(options) {}

  /// Throws ConventionError for the zero ideal.
  IdealDecision decide(const MonomialIdeal& ideal);

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Monomial>& gens) const noexcept;
  };
  IdealCertificatePtr solve(const std::vector<Monomial>& gens);

  SearchOptions options_;
  std::unordered_map<std::vector<Monomial>, IdealCertificatePtr, KeyHash> memo_;
  std::size_t nodes_ = 0;
};

IdealDecision k_decomposable_ideal(const MonomialIdeal& ideal, SearchOptions options = {});

/// Every face tau containing sigma has, for each v in sigma, some w outside
/// tau with (tau + w) - v a face. Throws NotAFaceError if sigma is not a face
/// and PreconditionError if it is empty.
bool is_shedding_face(const SimplicialComplex& complex, VertexSet face);

enum class SearchMode { Direct, Dual };

/// Direct mode searches shedding faces; dual mode decides the facet-complement
/// ideal I_{Delta^dual} and transports its certificate back.
ComplexDecision k_decomposable_complex(const SimplicialComplex& complex, SearchOptions options = {},
                                       SearchMode mode = SearchMode::Direct);

/// Rewrites an ideal certificate for I_{Delta^dual} on ground set X as a
/// certificate for Delta: u becomes supp(u), a leaf x^{X \ F} becomes F.
ComplexCertificatePtr complex_certificate_from_ideal(const IdealCertificate& certificate, VertexSet ground);

/// Re-checks every split and returns G(I) rebuilt from the leaves.
/// Throws InvalidCertificateError.
std::vector<Monomial> verify_certificate(const IdealCertificate& certificate, int k = kAnyK);

/// As above, and also checks that the leaves are exactly G(I).
void verify_certificate(const IdealCertificate& certificate, const MonomialIdeal& ideal, int k = kAnyK);

/// Throws InvalidCertificateError unless the tree decomposes `complex`.
void verify_certificate(const ComplexCertificate& certificate, const SimplicialComplex& complex, int k = kAnyK);

}  // namespace kdecomp
