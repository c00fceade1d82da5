#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kdecomp/context.hpp"
#include "kdecomp/monomial.hpp"

namespace kdecomp {

/// A proper monomial ideal, held as its minimal generating set G(I) in lex
/// term order. No generators means the zero ideal.
class MonomialIdeal {
 public:
  /// The zero ideal.
  explicit MonomialIdeal(ContextPtr ctx);

  /// Minimal generators of the ideal generated by `monomials`.
  /// Throws ImproperIdealError if 1 is among them.
  static MonomialIdeal generated_by(ContextPtr ctx, std::vector<Monomial> monomials);

  /// Trusts that `generators` are already pairwise incomparable (e.g. a
  /// subset of some G(I)); only sorts them.
  static MonomialIdeal from_minimal(ContextPtr ctx, std::vector<Monomial> generators);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t arity() const noexcept { return ctx_->size(); }
  std::span<const Monomial> generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_squarefree() const noexcept;
  bool contains(const Monomial& m) const;
  /// Componentwise max over the generators (1 for the zero ideal).
  Monomial lcm_of_generators() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_context(a.ctx_, b.ctx_) && a.generators_ == b.generators_;
  }

 private:
  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> generators);

  ContextPtr ctx_;
  std::vector<Monomial> generators_;
};

/// Drops every monomial divisible by another one (and duplicates).
/// Throws ImproperIdealError if 1 is present.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> monomials);

/// G(I) for I = (monomials).
MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> monomials);

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);

/// "(x*y, x*z)" or "0".
std::string to_string(const MonomialIdeal& ideal);

}  // namespace kdecomp
