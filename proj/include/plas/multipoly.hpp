#ifndef PLAS_MULTIPOLY_HPP
#define PLAS_MULTIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plas/errors.hpp"
#include "plas/rational.hpp"
#include "plas/symbols.hpp"

namespace plas {

/// Exponent vector, one entry per symbol of the owning context.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

/// Graded lexicographic order: total degree first, then the earlier symbol
/// with the larger exponent wins.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

/// Assignment of rational values to symbol names.
using Assignment = std::map<std::string, Rational>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// No stored coefficient is zero, so structural equality of term maps is
/// polynomial equality.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(SymbolContext ctx) : ctx_(std::move(ctx)) {}
  MultiPoly(SymbolContext ctx, const Rational& c) : ctx_(std::move(ctx)) {
    if (!c.is_zero()) terms_.emplace(Monomial(ctx_.size(), 0), c);
  }

  static MultiPoly variable(const SymbolContext& ctx, std::string_view name, std::uint32_t power = 1) {
    MultiPoly p(ctx);
    Monomial m(ctx.size(), 0);
    m[ctx.index(name)] = power;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  static MultiPoly term(const SymbolContext& ctx, Monomial m, const Rational& c) {
    if (m.size() != ctx.size()) throw ContextError("monomial length does not match context");
    MultiPoly p(ctx);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const SymbolContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  /// Value of a constant polynomial; throws if any symbol occurs.
  Rational constant_value() const {
    if (!is_constant()) throw UnsupportedInputError("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }
  /// Coefficient of the degree-0 term.
  Rational constant_term() const {
    auto it = terms_.find(Monomial(ctx_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::uint64_t degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
  }
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  /// True when the symbol with this index occurs in some term.
  bool uses(std::size_t var) const { return degree_in(var) > 0; }

  /// Names of the symbols that occur.
  std::vector<std::string> used_symbols() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < ctx_.size(); ++v)
      if (uses(v)) out.push_back(ctx_.name(v));
    return out;
  }

  /// Leading term in grlex order. Undefined on zero.
  const std::pair<const Monomial, Rational>& leading_term() const { return *terms_.rbegin(); }

  MultiPoly operator-() const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    adopt_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    adopt_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.ctx_.size() && b.ctx_.size()) require_same_context(a.ctx_, b.ctx_);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.ctx_.size() ? a.ctx_ : b.ctx_);
    MultiPoly r(a.ctx_);
    Monomial m(a.ctx_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    require_same_context(a.ctx_, b.ctx_);
    return a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly r(ctx_, Rational(1));
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// Exact value at a point; every occurring symbol must be assigned.
  Rational eval(const Assignment& point) const {
    std::vector<const Rational*> values(ctx_.size(), nullptr);
    for (std::size_t v = 0; v < ctx_.size(); ++v) {
      if (!uses(v)) continue;
      auto it = point.find(ctx_.name(v));
      if (it == point.end()) throw UnboundSymbolError(ctx_.name(v));
      values[v] = &it->second;
    }
    Rational sum;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v]) t *= plas::pow(*values[v], m[v]);
      sum += t;
    }
    return sum;
  }

  /// Replaces the assigned symbols by rationals; the others stay symbolic.
  MultiPoly substitute(const Assignment& values) const {
    std::vector<std::pair<std::size_t, Rational>> subs;
    for (const auto& [name, val] : values)
      if (auto i = ctx_.find(name)) subs.emplace_back(*i, val);
    if (subs.empty()) return *this;
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      Rational cc = c;
      for (const auto& [v, val] : subs) {
        if (mm[v]) cc *= plas::pow(val, mm[v]);
        mm[v] = 0;
      }
      r.add_term(mm, cc);
    }
    return r;
  }

  /// Replaces symbols by polynomials over the same context.
  MultiPoly compose(const std::map<std::size_t, MultiPoly>& images) const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      MultiPoly factor(ctx_, Rational(1));
      for (const auto& [v, img] : images) {
        if (rest[v]) factor *= img.pow(rest[v]);
        rest[v] = 0;
      }
      r += factor * term(ctx_, rest, c);
    }
    return r;
  }

  /// Partial derivative with respect to a symbol.
  MultiPoly diff(std::size_t var) const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
      if (!m[var]) continue;
      Monomial mm = m;
      mm[var] -= 1;
      r.add_term(mm, c * Rational(static_cast<long>(m[var])));
    }
    return r;
  }

  /// Re-expresses this polynomial over another context containing every
  /// symbol that occurs here.
  MultiPoly lift(const SymbolContext& target) const {
    MultiPoly r(target);
    std::vector<std::size_t> map(ctx_.size(), 0);
    for (std::size_t v = 0; v < ctx_.size(); ++v) {
      if (!uses(v)) continue;
      auto t = target.find(ctx_.name(v));
      if (!t) throw ContextError("symbol '" + ctx_.name(v) + "' missing from target context");
      map[v] = *t;
    }
    for (const auto& [m, c] : terms_) {
      Monomial mm(target.size(), 0);
      for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v]) mm[map[v]] = m[v];
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

  /// Adds c * m; used by builders that assemble polynomials term by term.
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  void adopt_context(const MultiPoly& o) {
    if (ctx_.size() == 0 && terms_.empty()) {
      ctx_ = o.ctx_;
      return;
    }
    if (o.ctx_.size() == 0 && o.terms_.empty()) return;
    require_same_context(ctx_, o.ctx_);
  }

  SymbolContext ctx_;
  Terms terms_;
};

/// Exact quotient a / b; throws when b does not divide a.
inline MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  const auto& ctx = a.context();
  MultiPoly q(ctx), r = a;
  const auto& [lb_mono, lb_coef] = b.leading_term();
  while (!r.is_zero()) {
    const auto& [lr_mono, lr_coef] = r.leading_term();
    Monomial m(lr_mono.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (lr_mono[i] < lb_mono[i]) throw Error("polynomial division is not exact");
      m[i] = lr_mono[i] - lb_mono[i];
    }
    MultiPoly t = MultiPoly::term(ctx, m, lr_coef / lb_coef);
    q += t;
    r -= t * b;
  }
  return q;
}

}  // namespace plas

#endif  // PLAS_MULTIPOLY_HPP
