// Commutative rings the stack sweep can run over. Every ring counts the
// ring-level adds and multiplies it performs.
#pragma once

#include <concepts>

#include "lpmtutte/bivariate_poly.hpp"
#include "lpmtutte/lattice.hpp"

namespace lpm {

template <class R>
concept Ring = requires(R& ring, const R& cring, const typename R::value_type& a,
                        const typename R::value_type& b, WeightTag tag) {
  typename R::value_type;
  { cring.zero() } -> std::convertible_to<typename R::value_type>;
  { cring.one() } -> std::convertible_to<typename R::value_type>;
  { ring.add(a, b) } -> std::convertible_to<typename R::value_type>;
  { ring.mul(a, b) } -> std::convertible_to<typename R::value_type>;
  { cring.eq(a, b) } -> std::convertible_to<bool>;
  { cring.from_weight(tag) } -> std::convertible_to<typename R::value_type>;
  { cring.counter() } -> std::convertible_to<const OpCounter&>;
};

/// Integers, with X and Y bound to fixed integer values.
class IntegerRing {
 public:
  using value_type = BigInt;

  IntegerRing(BigInt x0 = 1, BigInt y0 = 1) : x0_(std::move(x0)), y0_(std::move(y0)) {}

  BigInt zero() const { return 0; }
  BigInt one() const { return 1; }
  BigInt add(const BigInt& a, const BigInt& b) {
    ++ops_.adds;
    return a + b;
  }
  BigInt mul(const BigInt& a, const BigInt& b) {
    ++ops_.muls;
    return a * b;
  }
  bool eq(const BigInt& a, const BigInt& b) const { return a == b; }
  BigInt from_weight(WeightTag tag) const;

  const OpCounter& counter() const noexcept { return ops_; }
  void reset_counter() noexcept { ops_.reset(); }

 private:
  BigInt x0_, y0_;
  OpCounter ops_;
};

/// Rationals in lowest terms, with X and Y bound to (x0, y0).
class RationalRing {
 public:
  using value_type = Rational;

  RationalRing(Rational x0, Rational y0);

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational add(const Rational& a, const Rational& b) {
    ++ops_.adds;
    return a + b;
  }
  Rational mul(const Rational& a, const Rational& b) {
    ++ops_.muls;
    return a * b;
  }
  bool eq(const Rational& a, const Rational& b) const { return a == b; }
  Rational from_weight(WeightTag tag) const;

  const OpCounter& counter() const noexcept { return ops_; }
  void reset_counter() noexcept { ops_.reset(); }

 private:
  Rational x0_, y0_;
  OpCounter ops_;
};

/// Z[x, y]. Besides ring-level counts it keeps a second tally of the
/// coefficient operations done inside those polynomial adds and multiplies.
class PolynomialRing {
 public:
  using value_type = BivariatePoly;

  BivariatePoly zero() const { return {}; }
  BivariatePoly one() const { return BivariatePoly::constant(1); }
  BivariatePoly add(const BivariatePoly& a, const BivariatePoly& b) {
    ++ops_.adds;
    return poly_add(a, b, &coeff_ops_);
  }
  BivariatePoly mul(const BivariatePoly& a, const BivariatePoly& b) {
    ++ops_.muls;
    return poly_mul(a, b, &coeff_ops_);
  }
  bool eq(const BivariatePoly& a, const BivariatePoly& b) const { return a == b; }
  BivariatePoly from_weight(WeightTag tag) const;

  const OpCounter& counter() const noexcept { return ops_; }
  const OpCounter& coefficient_counter() const noexcept { return coeff_ops_; }
  void reset_counter() noexcept {
    ops_.reset();
    coeff_ops_.reset();
  }

 private:
  OpCounter ops_;
  OpCounter coeff_ops_;
};

static_assert(Ring<IntegerRing>);
static_assert(Ring<RationalRing>);
static_assert(Ring<PolynomialRing>);

}  // namespace lpm
