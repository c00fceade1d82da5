#include "kdecomp/monomial.hpp"

#include <algorithm>
#include <numeric>

#include <boost/container_hash/hash.hpp>

#include "kdecomp/errors.hpp"

namespace kdecomp {

namespace {

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw ContextMismatch("monomials have different numbers of variables");
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.size() > VertexSet::kMaxVertices) throw PreconditionError("at most 64 variables are supported");
  for (int e : exponents_) {
    if (e < 0) throw PreconditionError("monomial exponents must be nonnegative");
  }
}

Monomial Monomial::variable(std::size_t index, std::size_t arity, int power) {
  std::vector<int> e(arity, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

int Monomial::degree() const noexcept { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

bool Monomial::is_one() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial colon(const Monomial& f, const Monomial& g) {
  require_same_arity(f, g);
  std::vector<int> e(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) e[i] = std::max(f[i] - g[i], 0);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<int> e(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

VertexSet support(const Monomial& u) {
  VertexSet s;
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (u[i] != 0) s = s.with(i);
  }
  return s;
}

Monomial monomial_of_set(VertexSet w, std::size_t arity) {
  std::vector<int> e(arity, 0);
  for (auto v : w) {
    if (v >= arity) throw UnknownVertexError("vertex index outside the context");
    e[v] = 1;
  }
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m, const VariableContext& ctx) {
  if (m.arity() != ctx.size()) throw ContextMismatch("monomial does not match the context");
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  return boost::hash_range(m.exponents().begin(), m.exponents().end());
}

}  // namespace kdecomp
