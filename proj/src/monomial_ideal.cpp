#include "kdecomp/monomial_ideal.hpp"

#include <algorithm>

#include "kdecomp/errors.hpp"

namespace kdecomp {

namespace {

void sort_term_order(std::vector<Monomial>& ms) { std::sort(ms.begin(), ms.end(), term_order_greater); }

}  // namespace

std::vector<Monomial> minimal_monomials(std::vector<Monomial> monomials) {
  for (const auto& m : monomials) {
    if (m.is_one()) throw ImproperIdealError("1 cannot be a generator of a proper ideal");
  }
  // Ascending degree: a divisor always precedes its multiples.
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Monomial> kept;
  for (auto& m : monomials) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  sort_term_order(kept);
  return kept;
}

MonomialIdeal::MonomialIdeal(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw PreconditionError("ideal needs a variable context");
}

MonomialIdeal::MonomialIdeal(ContextPtr ctx, std::vector<Monomial> generators)
    : ctx_(std::move(ctx)), generators_(std::move(generators)) {
  if (!ctx_) throw PreconditionError("ideal needs a variable context");
  for (const auto& g : generators_) {
    if (g.arity() != ctx_->size()) throw ContextMismatch("generator does not match the ideal's context");
  }
}

MonomialIdeal MonomialIdeal::generated_by(ContextPtr ctx, std::vector<Monomial> monomials) {
  return MonomialIdeal(std::move(ctx), minimal_monomials(std::move(monomials)));
}

MonomialIdeal MonomialIdeal::from_minimal(ContextPtr ctx, std::vector<Monomial> generators) {
  sort_term_order(generators);
  return MonomialIdeal(std::move(ctx), std::move(generators));
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return divides(g, m); });
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial out = Monomial::one(arity());
  for (const auto& g : generators_) out = lcm(out, g);
  return out;
}

MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> monomials) {
  return MonomialIdeal::generated_by(std::move(ctx), std::move(monomials));
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  std::vector<Monomial> all(a.generators().begin(), a.generators().end());
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::generated_by(a.context(), std::move(all));
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out = "(";
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) out += ", ";
    out += to_string(g, *ideal.context());
    first = false;
  }
  out += ')';
  return out;
}

}  // namespace kdecomp
