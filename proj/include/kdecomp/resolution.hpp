#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kdecomp/betti_table.hpp"
#include "kdecomp/decomposition.hpp"
#include "kdecomp/homology.hpp"
#include "kdecomp/monomial_ideal.hpp"

namespace kdecomp {

/// An order of linear quotients f_1 < ... < f_m on G(I), with
/// sets[i] = set_I(f_i), the variables generating (f_1..f_{i-1}) : (f_i).
struct QuotientOrder {
  std::vector<Monomial> generators;
  std::vector<VertexSet> sets;
};

/// The variable set generating (prefix) : (f), or nullopt if that colon ideal
/// has a minimal generator of degree other than 1.
std::optional<VertexSet> colon_is_variable_generated(std::span<const Monomial> prefix, const Monomial& f);

/// First admissible order in lex-greedy backtracking order, or nullopt once
/// the whole search tree is exhausted. Throws ConventionError for I = 0.
std::optional<QuotientOrder> linear_quotients_order(const MonomialIdeal& ideal);

/// Re-checks every colon ideal and stored set.
bool is_admissible(const QuotientOrder& order);

/// The order of I^u followed by the order of I_u, built recursively from the
/// certificate. Throws InvalidCertificateError for a bad certificate and
/// InternalError if set_I(g) != supp(u) + set_{I_u}(g) (disjointly) anywhere.
QuotientOrder order_from_certificate(const IdealCertificate& certificate);

/// beta_{i,j}(I) = sum over deg(f_t) = j - i of C(|set_I(f_t)|, i).
BettiTable betti_from_order(const QuotientOrder& order);
/// As above after checking that the order runs over G(I).
BettiTable betti_from_order(const MonomialIdeal& ideal, const QuotientOrder& order);

/// beta_{i,j}(I) = beta_{i,j}(I^u) + sum_l C(m,l) beta_{i-l,j-l}(I_u), m = |supp u|.
BettiTable betti_recursive(const IdealCertificate& certificate);

/// pd(I) = max{pd(I^u), pd(I_u) + m}, reg(I) = max{reg(I^u), reg(I_u)};
/// a leaf f has pd 0 and reg deg f.
Invariants pd_reg_from_certificate(const IdealCertificate& certificate);

/// reg and pd of R/I_Delta through the shedding-face recursion
///   reg = max{reg(Delta \ s), reg(lk s) + |s|},  pd = max{pd(Delta \ s), pd(lk s)},
/// where the deletion keeps the ambient set X and the link lives on X \ s.
/// A simplex F on X has I = (x_v : v in X \ F): reg 0, pd |X \ F|.
QuotientInvariants reg_pd_complex(const SimplicialComplex& complex, const ComplexCertificate& certificate);

struct TeraoSides {
  int pd_of_dual = 0;       ///< pd(I^dual)
  int reg_of_quotient = 0;  ///< reg(R/I)
  bool holds() const noexcept { return pd_of_dual == reg_of_quotient; }
};

/// Both sides of pd(I^dual) = reg(R/I), each from the homology oracle.
TeraoSides terao_sides(const MonomialIdeal& ideal, Field field = {});
bool terao_check(const MonomialIdeal& ideal, Field field = {});

/// Largest minimal prime of a squarefree ideal, i.e. the largest minimal
/// vertex cover of its generator supports; 0 for the zero ideal.
int bight(const MonomialIdeal& ideal);

}  // namespace kdecomp
