#include "lpmtutte/bivariate_poly.hpp"

#include <algorithm>
#include <regex>
#include <tuple>

#include "lpmtutte/error.hpp"

namespace lpm {

namespace {

const BigInt& zero_coeff() {
  static const BigInt zero(0);
  return zero;
}

}  // namespace

BivariatePoly::BivariatePoly() : coeffs_(1) {}

BivariatePoly::BivariatePoly(int nx, int ny)
    : nx_(nx), ny_(ny), coeffs_(static_cast<std::size_t>(nx * ny)) {}

BivariatePoly BivariatePoly::constant(const BigInt& c) {
  BivariatePoly p;
  p.coeffs_[0] = c;
  return p;
}

BivariatePoly BivariatePoly::monomial(const BigInt& c, int deg_x, int deg_y) {
  if (c == 0) return {};
  BivariatePoly p(deg_x + 1, deg_y + 1);
  p.at(deg_x, deg_y) = c;
  return p;
}

const BigInt& BivariatePoly::coeff(int a, int b) const {
  if (a < 0 || b < 0 || a >= nx_ || b >= ny_) return zero_coeff();
  return at(a, b);
}

void BivariatePoly::set_coeff(int a, int b, const BigInt& c) {
  if (a >= nx_ || b >= ny_) {
    if (c == 0) return;
    BivariatePoly grown(std::max(nx_, a + 1), std::max(ny_, b + 1));
    for (int i = 0; i < nx_; ++i)
      for (int j = 0; j < ny_; ++j) grown.at(i, j).swap(at(i, j));
    *this = std::move(grown);
  }
  at(a, b) = c;
  trim();
}

bool BivariatePoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

int BivariatePoly::deg_x() const {
  for (int a = nx_ - 1; a >= 0; --a)
    for (int b = 0; b < ny_; ++b)
      if (at(a, b) != 0) return a;
  return -1;
}

int BivariatePoly::deg_y() const {
  for (int b = ny_ - 1; b >= 0; --b)
    for (int a = 0; a < nx_; ++a)
      if (at(a, b) != 0) return b;
  return -1;
}

int BivariatePoly::total_degree() const {
  int best = -1;
  for (int a = 0; a < nx_; ++a)
    for (int b = 0; b < ny_; ++b)
      if (at(a, b) != 0) best = std::max(best, a + b);
  return best;
}

std::size_t BivariatePoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

void BivariatePoly::trim() {
  const int dx = std::max(deg_x(), 0);
  const int dy = std::max(deg_y(), 0);
  if (dx + 1 == nx_ && dy + 1 == ny_) return;
  BivariatePoly out(dx + 1, dy + 1);
  for (int a = 0; a <= dx; ++a)
    for (int b = 0; b <= dy; ++b) out.at(a, b).swap(at(a, b));
  *this = std::move(out);
}

BivariatePoly BivariatePoly::trimmed() const {
  BivariatePoly copy = *this;
  copy.trim();
  return copy;
}

Rational BivariatePoly::eval(const Rational& x0, const Rational& y0) const {
  Rational acc = 0;
  for (int a = nx_ - 1; a >= 0; --a) {
    Rational inner = 0;
    for (int b = ny_ - 1; b >= 0; --b) inner = inner * y0 + Rational(at(a, b));
    acc = acc * x0 + inner;
  }
  acc.canonicalize();
  return acc;
}

BivariatePoly BivariatePoly::swapped() const {
  BivariatePoly out(ny_, nx_);
  for (int a = 0; a < nx_; ++a)
    for (int b = 0; b < ny_; ++b) out.at(b, a) = at(a, b);
  return out;
}

bool operator==(const BivariatePoly& p, const BivariatePoly& q) {
  const int nx = std::max(p.nx_, q.nx_);
  const int ny = std::max(p.ny_, q.ny_);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b)
      if (p.coeff(a, b) != q.coeff(a, b)) return false;
  return true;
}

BivariatePoly poly_add(const BivariatePoly& p, const BivariatePoly& q, OpCounter* coeff_ops) {
  BivariatePoly out(std::max(p.nx_, q.nx_), std::max(p.ny_, q.ny_));
  for (int a = 0; a < p.nx_; ++a)
    for (int b = 0; b < p.ny_; ++b) out.at(a, b) = p.at(a, b);
  std::uint64_t adds = 0;
  for (int a = 0; a < q.nx_; ++a) {
    for (int b = 0; b < q.ny_; ++b) {
      const BigInt& c = q.at(a, b);
      if (c == 0) continue;
      out.at(a, b) += c;
      ++adds;
    }
  }
  if (coeff_ops) coeff_ops->adds += adds;
  out.trim();
  return out;
}

BivariatePoly poly_mul(const BivariatePoly& p, const BivariatePoly& q, OpCounter* coeff_ops) {
  BivariatePoly out(p.nx_ + q.nx_ - 1, p.ny_ + q.ny_ - 1);
  std::uint64_t ops = 0;
  for (int a = 0; a < p.nx_; ++a) {
    for (int b = 0; b < p.ny_; ++b) {
      const BigInt& u = p.at(a, b);
      if (u == 0) continue;
      for (int c = 0; c < q.nx_; ++c) {
        for (int d = 0; d < q.ny_; ++d) {
          const BigInt& v = q.at(c, d);
          if (v == 0) continue;
          mpz_addmul(out.at(a + c, b + d).get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
          ++ops;
        }
      }
    }
  }
  if (coeff_ops) {
    coeff_ops->muls += ops;
    coeff_ops->adds += ops;
  }
  out.trim();
  return out;
}

std::string BivariatePoly::to_text() const {
  std::vector<std::tuple<int, int, const BigInt*>> terms;
  for (int a = 0; a < nx_; ++a)
    for (int b = 0; b < ny_; ++b)
      if (at(a, b) != 0) terms.emplace_back(a, b, &at(a, b));
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const auto& s, const auto& t) {
    const int ds = std::get<0>(s) + std::get<1>(s);
    const int dt = std::get<0>(t) + std::get<1>(t);
    if (ds != dt) return ds > dt;
    return std::get<0>(s) > std::get<0>(t);
  });

  std::string out;
  bool first = true;
  for (const auto& [a, b, c] : terms) {
    const bool negative = sgn(*c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    auto power = [&mono](const char* var, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    power("x", a);
    power("y", b);

    const BigInt magnitude = abs(*c);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

nlohmann::json BivariatePoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (int a = 0; a < nx_; ++a)
    for (int b = 0; b < ny_; ++b)
      if (at(a, b) != 0)
        terms.push_back({{"x", a}, {"y", b}, {"c", at(a, b).get_str()}});
  return {{"terms", terms}};
}

BivariatePoly BivariatePoly::from_json(const nlohmann::json& j) {
  static const std::regex integer(R"([+-]?[0-9]+)");
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw LpmError(ErrorKind::MalformedPolynomial, "expected {\"terms\": [...]}");
  BivariatePoly out;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("x") || !t.contains("y") || !t.contains("c") ||
        !t["x"].is_number_integer() || !t["y"].is_number_integer() || !t["c"].is_string())
      throw LpmError(ErrorKind::MalformedPolynomial, "bad term " + t.dump());
    const int a = t["x"].get<int>();
    const int b = t["y"].get<int>();
    const auto c = t["c"].get<std::string>();
    if (a < 0 || b < 0 || !std::regex_match(c, integer))
      throw LpmError(ErrorKind::MalformedPolynomial, "bad term " + t.dump());
    BigInt value(c[0] == '+' ? c.substr(1) : c, 10);
    out.set_coeff(a, b, out.coeff(a, b) + value);
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"(([+-]?[0-9]+)(/([0-9]+))?)");
  std::smatch match;
  if (!std::regex_match(text, match, form))
    throw LpmError(ErrorKind::MalformedRational, "'" + text + "'");
  std::string num = match[1].str();
  if (num[0] == '+') num.erase(0, 1);
  BigInt den = match[3].matched ? BigInt(match[3].str(), 10) : BigInt(1);
  if (den == 0) throw LpmError(ErrorKind::MalformedRational, "zero denominator in '" + text + "'");
  Rational q(BigInt(num, 10), den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace lpm
