#ifndef PLAS_UPOLY_HPP
#define PLAS_UPOLY_HPP

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plas/errors.hpp"
#include "plas/rational.hpp"

namespace plas {

/// Dense univariate polynomial over Q, coefficients indexed by power.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UPoly(std::move(v));
  }

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(UPoly a, const Rational& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(r));
  }

  UPoly monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
  }

  /// Quotient and remainder of Euclidean division.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error("univariate division by zero");
    UPoly r = a;
    std::vector<Rational> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
      std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      Rational f = r.leading() / b.leading();
      q[shift] += f;
      r -= monomial(f, shift) * b;
    }
    return {UPoly(std::move(q)), r};
  }

  std::string to_string(const std::string& var = "X") const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
      const Rational& c = c_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rational mag = abs(c);
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      std::string body = mono.empty() ? mag.to_string()
                                      : (mag == Rational(1) ? mono : mag.to_string() + "*" + mono);
      if (out.empty())
        out = neg ? "-" + body : body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = UPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'), monic.
inline UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  return UPoly::divmod(p, g).first.monic();
}

inline bool is_squarefree(const UPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  if (n == 0) return {};
  if (n > mpz_class("1000000000000000000"))
    throw UnsupportedInputError("coefficient too large for rational root search");
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// All distinct rational roots, ascending.
inline std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw Error("rational roots of the zero polynomial");
  std::set<Rational> roots;
  // Clear denominators to get an integer polynomial.
  mpz_class lcm_den = 1;
  for (const auto& c : p.coefficients()) lcm_den = lcm(lcm_den, c.denominator());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coefficients()) ints.push_back(c.numerator() * (lcm_den / c.denominator()));
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  const mpz_class& a0 = ints[low];
  const mpz_class& an = ints.back();
  if (ints.size() - low > 1) {
    for (const auto& num : detail::positive_divisors(a0))
      for (const auto& den : detail::positive_divisors(an))
        for (int s : {1, -1}) {
          Rational cand(mpz_class(num * s), den);
          if (p(cand).is_zero()) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace plas

#endif  // PLAS_UPOLY_HPP
