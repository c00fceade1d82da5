#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kdecomp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// Graded Betti numbers beta_{i,j} of a module, stored sparsely.
///
/// `minimal_source` records that the numbers come from a minimal resolution
/// (or a formula known to produce one), which is what invariants_from_betti
/// needs to read off pd and reg.
class BettiTable {
 public:
  using Entries = std::map<std::pair<int, int>, BigInt>;

  BettiTable() = default;
  explicit BettiTable(bool minimal_source) : minimal_source_(minimal_source) {}

  /// Adds `count` to beta_{i,j}; zero counts leave the table unchanged.
  void add(int i, int j, const BigInt& count);
  BigInt operator()(int i, int j) const;

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  bool minimal_source() const noexcept { return minimal_source_; }
  /// Sum over j of beta_{i,j}, for i = 0 .. max i.
  std::vector<BigInt> totals() const;

  /// Compares the numbers only, not the source tag.
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

 private:
  Entries entries_;
  bool minimal_source_ = false;
};

/// Projective dimension and regularity of a module (the ideal I itself).
struct Invariants {
  int pd = 0;
  int reg = 0;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// reg and pd of R/I. `by_convention` marks the zero ideal, for which
/// reg(R/0) = pd(R/0) = 0 is a convention rather than a computation.
struct QuotientInvariants {
  int reg = 0;
  int pd = 0;
  bool by_convention = false;
  friend bool operator==(const QuotientInvariants& a, const QuotientInvariants& b) {
    return a.reg == b.reg && a.pd == b.pd;
  }
};

/// pd = max i, reg = max (j - i). Throws ConventionError on an empty table and
/// PreconditionError on a table not tagged as coming from a minimal source.
Invariants invariants_from_betti(const BettiTable& table);

/// reg(R/I) = reg(I) - 1 and pd(R/I) = pd(I) + 1 for I != 0.
QuotientInvariants quotient_invariants(const Invariants& ideal);

/// Macaulay2-style layout: a header of homological degrees, a "total:" row,
/// then one row per j - i. Zero entries print as ".".
std::string render(const BettiTable& table);

}  // namespace kdecomp
