#pragma once

#include <cstdint>
#include <limits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace kdecomp {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Raised by CheckedInt64 when a result does not fit in 64 bits.
struct ArithmeticOverflow {};

/// int64 whose arithmetic throws ArithmeticOverflow instead of wrapping.
class CheckedInt64 {
 public:
  constexpr CheckedInt64() noexcept = default;
  constexpr CheckedInt64(std::int64_t v) noexcept : v_(v) {}  // NOLINT: implicit by design of Eigen casts

  constexpr std::int64_t value() const noexcept { return v_; }

  friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow{};
    return r;
  }
  friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow{};
    return r;
  }
  friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow{};
    return r;
  }
  friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw ArithmeticOverflow{};
    return a.v_ / b.v_;
  }
  CheckedInt64 operator-() const { return CheckedInt64(0) - *this; }
  CheckedInt64& operator+=(CheckedInt64 o) { return *this = *this + o; }
  CheckedInt64& operator-=(CheckedInt64 o) { return *this = *this - o; }
  CheckedInt64& operator*=(CheckedInt64 o) { return *this = *this * o; }
  CheckedInt64& operator/=(CheckedInt64 o) { return *this = *this / o; }
  friend constexpr bool operator==(CheckedInt64, CheckedInt64) noexcept = default;

 private:
  std::int64_t v_ = 0;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Every intermediate
/// entry is a minor of the input, so the divisions are exact.
template <typename Integer>
Eigen::Index rank_fraction_free(DenseMatrix<Integer> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Integer previous(1);
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, c) == Integer(0)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(r, j) = (m(rank, c) * m(r, j) - m(r, c) * m(rank, j)) / previous;
      }
      m(r, c) = Integer(0);
    }
    previous = m(rank, c);
    ++rank;
  }
  return rank;
}

/// Rank over Z/p, p prime below 2^31.
Eigen::Index rank_mod_p(DenseMatrix<std::int64_t> m, std::int64_t p);

/// Exact rank over Q of an integer matrix: a checked 64-bit Bareiss pass,
/// redone in arbitrary precision if any intermediate overflows.
Eigen::Index rank_rational(const DenseMatrix<std::int64_t>& m);

}  // namespace kdecomp

namespace Eigen {

template <>
struct NumTraits<kdecomp::CheckedInt64> : GenericNumTraits<kdecomp::CheckedInt64> {
  using Real = kdecomp::CheckedInt64;
  using NonInteger = kdecomp::CheckedInt64;
  using Literal = kdecomp::CheckedInt64;
  using Nested = kdecomp::CheckedInt64;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline int digits10() { return 18; }
};

}  // namespace Eigen
