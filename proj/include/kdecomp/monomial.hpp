#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kdecomp/context.hpp"
#include "kdecomp/vertex_set.hpp"

namespace kdecomp {

/// x_1^{a_1} ... x_n^{a_n} as a dense exponent vector. The zero vector is 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t arity) { return Monomial(std::vector<int>(arity, 0)); }
  static Monomial variable(std::size_t index, std::size_t arity, int power = 1);

  std::size_t arity() const noexcept { return exponents_.size(); }
  /// v_i(f)
  int operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const int> exponents() const noexcept { return exponents_; }
  int degree() const noexcept;
  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on exponent vectors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.exponents_ <=> b.exponents_; }

 private:
  std::vector<int> exponents_;
};

/// Lex term order with x_1 > x_2 > ... : x^2 > xy > y^2, xy > xz > yz.
/// Generators are always listed in this order.
inline bool term_order_greater(const Monomial& a, const Monomial& b) { return a > b; }

bool divides(const Monomial& a, const Monomial& b);

/// f : g = f / gcd(f, g).
Monomial colon(const Monomial& f, const Monomial& g);

Monomial lcm(const Monomial& a, const Monomial& b);

/// supp(u) = {x_i : a_i != 0}
VertexSet support(const Monomial& u);

/// x^W = prod_{x in W} x
Monomial monomial_of_set(VertexSet w, std::size_t arity);

/// "x^2*y", or "1".
std::string to_string(const Monomial& m, const VariableContext& ctx);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace kdecomp
