#include "kdecomp/resolution.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "kdecomp/errors.hpp"

namespace kdecomp {

namespace {

QuotientOrder build_order(const IdealCertificate& cert) {
  if (cert.is_leaf()) return {{cert.leaf().generator}, {VertexSet{}}};
  const auto& node = cert.split();
  auto order = build_order(*node.deletion);
  const auto tail = build_order(*node.link);
  const auto supp = support(node.shedding);
  const auto offset = order.generators.size();
  order.generators.insert(order.generators.end(), tail.generators.begin(), tail.generators.end());
  for (std::size_t t = 0; t < tail.generators.size(); ++t) {
    const auto prefix = std::span<const Monomial>(order.generators).first(offset + t);
    const auto set = colon_is_variable_generated(prefix, tail.generators[t]);
    if (!set) throw InternalError("concatenated order is not an order of linear quotients");
    if (tail.sets[t].intersects(supp) || *set != (supp | tail.sets[t])) {
      throw InternalError("set_I(g) is not the disjoint union of supp(u) and set_{I_u}(g)");
    }
    order.sets.push_back(*set);
  }
  return order;
}

BettiTable recursive_table(const IdealCertificate& cert) {
  BettiTable table(true);
  if (cert.is_leaf()) {
    table.add(0, cert.leaf().generator.degree(), 1);
    return table;
  }
  const auto& node = cert.split();
  table = recursive_table(*node.deletion);
  const auto lower = recursive_table(*node.link);
  const int m = static_cast<int>(support(node.shedding).size());
  for (const auto& [key, count] : lower.entries()) {
    for (int l = 0; l <= m; ++l) table.add(key.first + l, key.second + l, binomial(m, l) * count);
  }
  return table;
}

Invariants recursive_invariants(const IdealCertificate& cert) {
  if (cert.is_leaf()) return {0, cert.leaf().generator.degree()};
  const auto& node = cert.split();
  const auto del = recursive_invariants(*node.deletion);
  const auto lk = recursive_invariants(*node.link);
  const int m = static_cast<int>(support(node.shedding).size());
  return {std::max(del.pd, lk.pd + m), std::max(del.reg, lk.reg)};
}

QuotientInvariants complex_invariants(const SimplicialComplex& complex, const ComplexCertificate& cert) {
  if (cert.is_leaf()) {
    if (!cert.leaf().facet) throw ConventionError("the void complex has the unit ideal; reg and pd are undefined");
    const auto missing = complex.ground() - *cert.leaf().facet;
    return {0, static_cast<int>(missing.size()), missing.empty()};
  }
  const auto& node = cert.split();
  const auto del = complex_invariants(delete_face(complex, node.face), *node.deletion);
  const auto lk = complex_invariants(link(complex, node.face), *node.link);
  const int size = static_cast<int>(node.face.size());
  return {std::max(del.reg, lk.reg + size), std::max(del.pd, lk.pd), false};
}

}  // namespace

std::optional<VertexSet> colon_is_variable_generated(std::span<const Monomial> prefix, const Monomial& f) {
  std::vector<Monomial> colons;
  colons.reserve(prefix.size());
  for (const auto& g : prefix) {
    auto c = colon(g, f);
    if (c.is_one()) return std::nullopt;  // the colon ideal is R
    colons.push_back(std::move(c));
  }
  VertexSet vars;
  for (const auto& c : minimal_monomials(std::move(colons))) {
    if (c.degree() != 1) return std::nullopt;
    vars = vars | support(c);
  }
  return vars;
}

std::optional<QuotientOrder> linear_quotients_order(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ConventionError("the zero ideal has no generators to order");
  const auto gens = ideal.generators();
  const std::size_t r = gens.size();
  QuotientOrder order;
  std::vector<bool> used(r, false);
  // Admissibility of the next step depends only on the set already placed,
  // so dead ends are cached by that set.
  std::unordered_set<std::vector<bool>> dead;

  std::function<bool()> extend = [&]() -> bool {
    if (order.generators.size() == r) return true;
    if (dead.count(used) != 0) return false;
    for (std::size_t g = 0; g < r; ++g) {
      if (used[g]) continue;
      auto set = colon_is_variable_generated(order.generators, gens[g]);
      if (!set) continue;
      used[g] = true;
      order.generators.push_back(gens[g]);
      order.sets.push_back(*set);
      if (extend()) return true;
      order.generators.pop_back();
      order.sets.pop_back();
      used[g] = false;
    }
    dead.insert(used);
    return false;
  };
  if (!extend()) return std::nullopt;
  return order;
}

bool is_admissible(const QuotientOrder& order) {
  if (order.generators.size() != order.sets.size()) return false;
  for (std::size_t i = 0; i < order.generators.size(); ++i) {
    const auto prefix = std::span<const Monomial>(order.generators).first(i);
    const auto set = colon_is_variable_generated(prefix, order.generators[i]);
    if (!set || *set != order.sets[i]) return false;
  }
  return true;
}

QuotientOrder order_from_certificate(const IdealCertificate& certificate) {
  verify_certificate(certificate);
  return build_order(certificate);
}

BettiTable betti_from_order(const QuotientOrder& order) {
  BettiTable table(true);
  for (std::size_t t = 0; t < order.generators.size(); ++t) {
    const int size = static_cast<int>(order.sets[t].size());
    const int degree = order.generators[t].degree();
    for (int i = 0; i <= size; ++i) table.add(i, degree + i, binomial(size, i));
  }
  return table;
}

BettiTable betti_from_order(const MonomialIdeal& ideal, const QuotientOrder& order) {
  auto sorted = order.generators;
  std::sort(sorted.begin(), sorted.end(), term_order_greater);
  if (!std::equal(sorted.begin(), sorted.end(), ideal.generators().begin(), ideal.generators().end())) {
    throw PreconditionError("order does not run over the minimal generators of the ideal");
  }
  return betti_from_order(order);
}

BettiTable betti_recursive(const IdealCertificate& certificate) {
  verify_certificate(certificate);
  return recursive_table(certificate);
}

Invariants pd_reg_from_certificate(const IdealCertificate& certificate) {
  verify_certificate(certificate);
  return recursive_invariants(certificate);
}

QuotientInvariants reg_pd_complex(const SimplicialComplex& complex, const ComplexCertificate& certificate) {
  verify_certificate(certificate, complex);
  return complex_invariants(complex, certificate);
}

TeraoSides terao_sides(const MonomialIdeal& ideal, Field field) {
  if (!ideal.is_squarefree()) throw NotSquarefreeError("the duality check needs a squarefree ideal");
  if (ideal.is_zero()) throw PreconditionError("the duality check needs a nonzero ideal");
  const auto dual = alexander_dual_ideal(ideal);
  TeraoSides out;
  out.pd_of_dual = invariants_from_betti(betti_hochster(dual, field)).pd;
  out.reg_of_quotient = oracle_quotient_invariants(ideal, field).reg;
  return out;
}

bool terao_check(const MonomialIdeal& ideal, Field field) { return terao_sides(ideal, field).holds(); }

int bight(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw NotSquarefreeError("big height is computed for squarefree ideals");
  std::vector<VertexSet> supports;
  for (const auto& g : ideal.generators()) supports.push_back(support(g));
  if (supports.empty()) return 0;
  std::size_t best = 0;
  for (auto cover : minimal_transversals(supports)) best = std::max(best, cover.size());
  return static_cast<int>(best);
}

}  // namespace kdecomp
