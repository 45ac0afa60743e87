#ifndef PLAS_RATIONAL_HPP
#define PLAS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "plas/errors.hpp"

namespace plas {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with an optional leading '-'.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t, bool allow_sign) {
      if (allow_sign && !t.empty() && t.front() == '-') t.remove_prefix(1);
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (slash == std::string::npos) {
      if (!valid_int(s, true)) throw Error("invalid rational literal '" + s + "'");
      return Rational(mpz_class(s), mpz_class(1));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
      throw Error("invalid rational literal '" + s + "'");
    return Rational(mpz_class(num), mpz_class(den));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string to_string() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned exp) {
  Rational out(1);
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace plas

#endif  // PLAS_RATIONAL_HPP
