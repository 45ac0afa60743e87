#ifndef PLAS_POLY_MATRIX_HPP
#define PLAS_POLY_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "plas/errors.hpp"
#include "plas/multipoly.hpp"
#include "plas/poly_text.hpp"
#include "plas/rat_matrix.hpp"
#include "plas/upoly.hpp"

namespace plas {

/// Column vector of polynomials, e.g. a generic element (x1, ..., xn).
using PolyVector = std::vector<MultiPoly>;

inline PolyVector generic_vector(const SymbolContext& ctx, const std::string& prefix, std::size_t n) {
  PolyVector v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(MultiPoly::variable(ctx, prefix + std::to_string(i)));
  return v;
}

/// Standard basis vector e_i (0-based index).
inline PolyVector basis_vector(const SymbolContext& ctx, std::size_t n, std::size_t i) {
  PolyVector v(n, MultiPoly(ctx));
  v.at(i) = MultiPoly(ctx, Rational(1));
  return v;
}

inline PolyVector zero_vector(const SymbolContext& ctx, std::size_t n) { return PolyVector(n, MultiPoly(ctx)); }

inline bool is_zero(const PolyVector& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

inline PolyVector operator+(PolyVector a, const PolyVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline PolyVector operator-(PolyVector a, const PolyVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline PolyVector operator*(const MultiPoly& s, PolyVector v) {
  for (auto& p : v) p = s * p;
  return v;
}
inline PolyVector operator*(const Rational& s, PolyVector v) {
  for (auto& p : v) p *= s;
  return v;
}

inline std::string format_vector(const PolyVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_poly(v[i]);
  return out + ")";
}

/// Dense matrix with polynomial entries, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(SymbolContext ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, MultiPoly(ctx_)) {}

  static PolyMatrix identity(const SymbolContext& ctx, std::size_t n) {
    PolyMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly(ctx, Rational(1));
    return m;
  }

  /// Parses a row-major table of polynomial strings.
  static PolyMatrix parse(const SymbolContext& ctx, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows.front().empty()) throw DimensionError("empty matrix");
    PolyMatrix m(ctx, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = parse_poly(rows[i][j], ctx);
    }
    return m;
  }

  static PolyMatrix from_rational(const SymbolContext& ctx, const RatMatrix& r) {
    PolyMatrix m(ctx, r.rows(), r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) m(i, j) = MultiPoly(ctx, r(i, j));
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static PolyMatrix from_columns(const SymbolContext& ctx, const std::vector<PolyVector>& cols) {
    if (cols.empty()) throw DimensionError("no columns");
    PolyMatrix m(ctx, cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw DimensionError("column length mismatch");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const SymbolContext& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

  PolyVector column(std::size_t j) const {
    PolyVector v;
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  bool is_zero() const {
    for (const auto& p : a_)
      if (!p.is_zero()) return false;
    return true;
  }
  bool is_constant() const {
    for (const auto& p : a_)
      if (!p.is_constant()) return false;
    return true;
  }

  RatMatrix to_rational() const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).constant_value();
    return r;
  }

  MultiPoly trace() const {
    require_square("trace");
    MultiPoly t(ctx_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  PolyMatrix transpose() const {
    PolyMatrix t(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  PolyMatrix substitute(const Assignment& values) const {
    PolyMatrix r = *this;
    for (auto& p : r.a_) p = p.substitute(values);
    return r;
  }
  PolyMatrix lift(const SymbolContext& target) const {
    PolyMatrix r(target, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].lift(target);
    return r;
  }
  /// Applies a map to every entry.
  template <class F>
  PolyMatrix map(F&& f) const {
    PolyMatrix r = *this;
    for (auto& p : r.a_) p = f(p);
    return r;
  }

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    a.require_same_shape(b);
    PolyMatrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
  }
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    a.require_same_shape(b);
    PolyMatrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
  }
  PolyMatrix operator-() const {
    PolyMatrix r = *this;
    for (auto& p : r.a_) p = -p;
    return r;
  }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    require_same_context(a.ctx_, b.ctx_);
    PolyMatrix r(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const MultiPoly& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend PolyMatrix operator*(const Rational& s, PolyMatrix m) {
    for (auto& p : m.a_) p *= s;
    return m;
  }
  friend PolyMatrix operator*(const MultiPoly& s, PolyMatrix m) {
    for (auto& p : m.a_) p = s * p;
    return m;
  }
  friend PolyVector operator*(const PolyMatrix& m, const PolyVector& v) {
    if (m.cols_ != v.size()) throw DimensionError("matrix-vector dimension mismatch");
    PolyVector r(m.rows_, MultiPoly(m.ctx_));
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j)
        if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
    return r;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  PolyMatrix pow(unsigned k) const {
    require_square("power");
    PolyMatrix r = identity(ctx_, rows_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  void require_square(const char* what) const {
    if (!is_square()) throw DimensionError(std::string(what) + " requires a square matrix");
  }

 private:
  void require_same_shape(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  SymbolContext ctx_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<MultiPoly> a_;
};

inline std::vector<std::vector<std::string>> format_matrix_rows(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(format_poly(m(i, j)));
  return out;
}

inline std::string format_matrix(const PolyMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + format_poly(m(i, j));
    out += "]";
  }
  return out + "]";
}

/// Commutator AB - BA.
inline PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

namespace detail {

// Laplace expansion over the remaining columns in `cols`, starting at `row`.
inline MultiPoly laplace(const PolyMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.size() == 1) return m(row, cols[0]);
  MultiPoly acc(m.context());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MultiPoly& e = m(row, cols[k]);
    if (e.is_zero()) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<long>(k));
    MultiPoly minor = laplace(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<long>(k), c);
    if (k % 2 == 0)
      acc += e * minor;
    else
      acc -= e * minor;
  }
  return acc;
}

// Fraction-free Bareiss elimination.
inline MultiPoly bareiss(PolyMatrix m) {
  std::size_t n = m.rows();
  MultiPoly prev(m.context(), Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return MultiPoly(m.context());
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  MultiPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace detail

/// Exact determinant: cofactor expansion up to 5x5, Bareiss above.
inline MultiPoly determinant(const PolyMatrix& m) {
  m.require_square("determinant");
  if (m.rows() <= 5) {
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return detail::laplace(m, 0, cols);
  }
  return detail::bareiss(m);
}

/// Monic characteristic polynomial det(T*I - M); coefficients[k] multiplies T^k.
struct CharPoly {
  std::vector<MultiPoly> coefficients;

  std::size_t degree() const { return coefficients.size() - 1; }

  /// True when every non-leading coefficient vanishes, i.e. the polynomial is T^n.
  bool is_pure_power() const {
    for (std::size_t k = 0; k + 1 < coefficients.size(); ++k)
      if (!coefficients[k].is_zero()) return false;
    return true;
  }

  /// Univariate form, for matrices with constant entries.
  UPoly to_upoly() const {
    std::vector<Rational> c;
    for (const auto& p : coefficients) c.push_back(p.constant_value());
    return UPoly(std::move(c));
  }

  /// The polynomial as one MultiPoly over a context extended by the indeterminate.
  MultiPoly as_poly(const std::string& indeterminate) const {
    const auto& ctx = coefficients.front().context();
    SymbolContext ext = ctx.extended({indeterminate});
    MultiPoly t = MultiPoly::variable(ext, indeterminate);
    MultiPoly acc(ext);
    for (std::size_t k = 0; k < coefficients.size(); ++k) acc += coefficients[k].lift(ext) * t.pow(static_cast<unsigned>(k));
    return acc;
  }

  /// Descending powers with parenthesised multi-term coefficients, e.g.
  /// "lambda^3 + (-1/2*y1^2 - 1/2*y2^2)*lambda".
  std::string to_string(const std::string& var = "lambda") const {
    std::string out;
    for (std::size_t kk = coefficients.size(); kk-- > 0;) {
      const MultiPoly& c = coefficients[kk];
      if (c.is_zero()) continue;
      std::string power = kk == 0 ? "" : (kk == 1 ? var : var + "^" + std::to_string(kk));
      std::string body;
      bool negative = false;
      if (c.term_count() == 1) {
        MultiPoly mag = c;
        if (c.leading_term().second.sign() < 0) {
          negative = true;
          mag = -c;
        }
        std::string cs = format_poly(mag);
        if (power.empty())
          body = cs;
        else if (cs == "1")
          body = power;
        else
          body = cs + "*" + power;
      } else {
        body = "(" + format_poly(c) + ")" + (power.empty() ? "" : "*" + power);
      }
      if (out.empty())
        out = negative ? "-" + body : body;
      else
        out += (negative ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
  }
};

/// Faddeev-LeVerrier recurrence: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
/// Name for the indeterminate of a characteristic polynomial: "lambda", or "T" when `m` uses lambda itself.
inline std::string char_poly_variable(const PolyMatrix& m) {
  if (!m.context().contains("lambda")) return "lambda";
  std::size_t li = m.context().index("lambda");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).uses(li)) return "T";
  return "lambda";
}

inline CharPoly char_poly(const PolyMatrix& a) {
  a.require_square("characteristic polynomial");
  const auto& ctx = a.context();
  std::size_t n = a.rows();
  CharPoly cp;
  cp.coefficients.assign(n + 1, MultiPoly(ctx));
  cp.coefficients[n] = MultiPoly(ctx, Rational(1));
  PolyMatrix m(ctx, n, n);
  PolyMatrix id = PolyMatrix::identity(ctx, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + cp.coefficients[n - k + 1] * id;
    cp.coefficients[n - k] = (a * m).trace() * (Rational(-1) / Rational(static_cast<long>(k)));
  }
  return cp;
}

/// p(M) for a characteristic polynomial with polynomial coefficients (Horner).
inline PolyMatrix evaluate(const CharPoly& p, const PolyMatrix& m) {
  m.require_square("polynomial evaluation");
  std::size_t n = m.rows();
  PolyMatrix acc(m.context(), n, n);
  PolyMatrix id = PolyMatrix::identity(m.context(), n);
  for (std::size_t k = p.coefficients.size(); k-- > 0;) acc = acc * m + p.coefficients[k] * id;
  return acc;
}

/// M^n == 0 as a polynomial identity; stops at the first vanishing power.
inline bool is_nilpotent(const PolyMatrix& m) {
  m.require_square("nilpotency test");
  PolyMatrix p = m;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    if (p.is_zero()) return true;
    if (k < m.rows()) p = p * m;
  }
  return p.is_zero();
}

/// Same question answered through the characteristic polynomial.
inline bool is_nilpotent_by_char_poly(const PolyMatrix& m) { return char_poly(m).is_pure_power(); }

/// Additive Jordan-Chevalley decomposition M = S + N of a constant matrix.
struct JordanPair {
  PolyMatrix semisimple;
  PolyMatrix nilpotent;
};

enum class ElementType { nilpotent, semisimple, mixed };

inline const char* to_string(ElementType t) {
  switch (t) {
    case ElementType::nilpotent: return "nilpotent";
    case ElementType::semisimple: return "semisimple";
    case ElementType::mixed: return "mixed";
  }
  return "?";
}

/// Newton iteration S <- S - p(S) p'(S)^{-1} with p the squarefree part of
/// the characteristic polynomial; converges in at most log2(n) + 1 steps.
inline JordanPair jordan_chevalley(const PolyMatrix& m) {
  m.require_square("Jordan-Chevalley decomposition");
  if (!m.is_constant()) throw UnsupportedInputError("Jordan-Chevalley decomposition needs constant rational entries");
  RatMatrix a = m.to_rational();
  UPoly p = squarefree_part(char_poly(m).to_upoly());
  UPoly dp = p.derivative();
  RatMatrix s = a;
  for (std::size_t iter = 0; iter <= 2 * m.rows() + 2; ++iter) {
    RatMatrix ps = evaluate(p, s);
    if (ps.is_zero()) {
      const auto& ctx = m.context();
      return {PolyMatrix::from_rational(ctx, s), PolyMatrix::from_rational(ctx, a - s)};
    }
    s = s - ps * evaluate(dp, s).inverse();
  }
  throw Error("Jordan-Chevalley iteration did not converge");
}

inline ElementType element_type(const PolyMatrix& m) {
  JordanPair jp = jordan_chevalley(m);
  if (jp.semisimple.is_zero()) return ElementType::nilpotent;
  if (jp.nilpotent.is_zero()) return ElementType::semisimple;
  return ElementType::mixed;
}

}  // namespace plas

#endif  // PLAS_POLY_MATRIX_HPP
