#include "lpmtutte/rings.hpp"

namespace lpm {

BigInt IntegerRing::from_weight(WeightTag tag) const {
  switch (tag) {
    case WeightTag::X: return x0_;
    case WeightTag::Y: return y0_;
    case WeightTag::One: break;
  }
  return 1;
}

RationalRing::RationalRing(Rational x0, Rational y0) : x0_(std::move(x0)), y0_(std::move(y0)) {
  x0_.canonicalize();
  y0_.canonicalize();
}

Rational RationalRing::from_weight(WeightTag tag) const {
  switch (tag) {
    case WeightTag::X: return x0_;
    case WeightTag::Y: return y0_;
    case WeightTag::One: break;
  }
  return 1;
}

BivariatePoly PolynomialRing::from_weight(WeightTag tag) const {
  switch (tag) {
    case WeightTag::X: return BivariatePoly::x();
    case WeightTag::Y: return BivariatePoly::y();
    case WeightTag::One: break;
  }
  return one();
}

}  // namespace lpm
