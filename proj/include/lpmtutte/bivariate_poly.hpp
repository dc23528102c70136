#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace lpm {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Ring-level operation tallies. Counters only ever grow.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;

  std::uint64_t total() const noexcept { return adds + muls; }
  void reset() noexcept { adds = muls = 0; }
};

/// Polynomial in x and y with exact integer coefficients stored on a dense
/// (maxDegX + 1) x (maxDegY + 1) grid. Arithmetic results are trimmed so
/// the grid never has an all-zero last row or column (except the zero
/// polynomial, a 1 x 1 grid holding 0).
class BivariatePoly {
 public:
  BivariatePoly();

  static BivariatePoly constant(const BigInt& c);
  static BivariatePoly monomial(const BigInt& c, int deg_x, int deg_y);
  static BivariatePoly x() { return monomial(1, 1, 0); }
  static BivariatePoly y() { return monomial(1, 0, 1); }

  int max_deg_x() const noexcept { return nx_ - 1; }
  int max_deg_y() const noexcept { return ny_ - 1; }

  /// Coefficient of x^a y^b; zero outside the grid.
  const BigInt& coeff(int a, int b) const;
  void set_coeff(int a, int b, const BigInt& c);

  bool is_zero() const;
  /// -1 for the zero polynomial.
  int deg_x() const;
  int deg_y() const;
  int total_degree() const;
  std::size_t term_count() const;

  BivariatePoly trimmed() const;

  /// Exact value at (x0, y0), Horner in both variables.
  Rational eval(const Rational& x0, const Rational& y0) const;
  /// The polynomial with x and y exchanged.
  BivariatePoly swapped() const;

  /// Terms by total degree, then x-degree, both descending:
  /// "x^2 + x*y + y^2 + x + y".
  std::string to_text() const;
  /// {"terms":[{"x":a,"y":b,"c":"<decimal>"}...]} sorted by (a, b).
  nlohmann::json to_json() const;
  /// Throws LpmError(MalformedPolynomial) on schema violations.
  static BivariatePoly from_json(const nlohmann::json& j);

  friend bool operator==(const BivariatePoly& p, const BivariatePoly& q);

  // Coefficient-level arithmetic; `coeff_ops` (when non-null) receives one
  // tick per big-integer add or multiply actually performed.
  friend BivariatePoly poly_add(const BivariatePoly& p, const BivariatePoly& q,
                                OpCounter* coeff_ops);
  friend BivariatePoly poly_mul(const BivariatePoly& p, const BivariatePoly& q,
                                OpCounter* coeff_ops);

 private:
  BivariatePoly(int nx, int ny);
  BigInt& at(int a, int b) { return coeffs_[static_cast<std::size_t>(a * ny_ + b)]; }
  const BigInt& at(int a, int b) const {
    return coeffs_[static_cast<std::size_t>(a * ny_ + b)];
  }
  void trim();

  int nx_ = 1;
  int ny_ = 1;
  std::vector<BigInt> coeffs_;
};

BivariatePoly poly_add(const BivariatePoly& p, const BivariatePoly& q,
                       OpCounter* coeff_ops = nullptr);
BivariatePoly poly_mul(const BivariatePoly& p, const BivariatePoly& q,
                       OpCounter* coeff_ops = nullptr);

inline BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q) {
  return poly_add(p, q);
}
inline BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q) {
  return poly_mul(p, q);
}

inline Rational poly_eval(const BivariatePoly& p, const Rational& x0, const Rational& y0) {
  return p.eval(x0, y0);
}

/// Parses "p/q" or an integer; canonicalizes. Throws MalformedRational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace lpm
