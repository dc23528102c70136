#include "lpmtutte/engine.hpp"

namespace lpm {

BivariatePoly tutte_polynomial(const LatticeRegion& region) {
  PolynomialRing ring;
  return sweep(region, ring);
}

Rational tutte_eval(const LatticeRegion& region, const Rational& x0, const Rational& y0) {
  RationalRing ring(x0, y0);
  return sweep(region, ring);
}

BigInt count_bases(const LatticeRegion& region) {
  IntegerRing ring(1, 1);
  return sweep(region, ring);
}

}  // namespace lpm
