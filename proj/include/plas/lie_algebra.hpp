#ifndef PLAS_LIE_ALGEBRA_HPP
#define PLAS_LIE_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plas/errors.hpp"
#include "plas/multipoly.hpp"
#include "plas/poly_matrix.hpp"
#include "plas/rat_matrix.hpp"

namespace plas {

/// One stored bracket [e_i, e_j] = value, 0-based with i < j.
struct BracketEntry {
  std::size_t i = 0, j = 0;
  PolyVector value;
};

/// Unvalidated bracket data: anything that may or may not satisfy Jacobi.
struct StructureConstants {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> params;
  SymbolContext context;
  std::vector<BracketEntry> entries;
};

/// Full antisymmetric table c[i][j] built from i < j entries.
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(const StructureConstants& sc) : ctx_(sc.context), n_(sc.dim) {
    if (n_ == 0) throw DimensionError("algebra dimension must be positive");
    for (const auto& p : sc.params)
      if (!ctx_.contains(p)) throw UnboundSymbolError(p);
    table_.assign(n_ * n_, zero_vector(ctx_, n_));
    std::vector<bool> seen(n_ * n_, false);
    for (const auto& e : sc.entries) {
      if (e.i >= e.j) throw SchemaError("bracket entries need i < j (got " + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) + ")");
      if (e.j >= n_) throw SchemaError("bracket index " + std::to_string(e.j + 1) + " exceeds dimension");
      if (e.value.size() != n_) throw DimensionError("bracket value has wrong length");
      if (seen[e.i * n_ + e.j]) throw SchemaError("bracket [e" + std::to_string(e.i + 1) + ", e" + std::to_string(e.j + 1) + "] given twice");
      seen[e.i * n_ + e.j] = true;
      for (const auto& coeff : e.value) {
        require_same_context(coeff.context(), ctx_);
        for (const auto& s : coeff.used_symbols())
          if (std::find(sc.params.begin(), sc.params.end(), s) == sc.params.end())
            throw SchemaError("structure constant uses '" + s + "', which is not a declared parameter");
      }
      table_[e.i * n_ + e.j] = e.value;
      table_[e.j * n_ + e.i] = Rational(-1) * e.value;
    }
  }

  std::size_t dim() const { return n_; }
  const SymbolContext& context() const { return ctx_; }
  const PolyVector& operator()(std::size_t i, std::size_t j) const { return table_.at(i * n_ + j); }

  PolyVector bracket(const PolyVector& a, const PolyVector& b) const {
    if (a.size() != n_ || b.size() != n_) throw DimensionError("vector length does not match algebra dimension");
    PolyVector r = zero_vector(ctx_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j || b[j].is_zero()) continue;
        const PolyVector& c = (*this)(i, j);
        if (is_zero(c)) continue;
        MultiPoly ab = a[i] * b[j];
        for (std::size_t k = 0; k < n_; ++k)
          if (!c[k].is_zero()) r[k] += ab * c[k];
      }
    }
    return r;
  }

 private:
  SymbolContext ctx_;
  std::size_t n_ = 0;
  std::vector<PolyVector> table_;
};

struct JacobiReport {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> triple;  // first failing (i, j, k), 0-based
  PolyVector defect;
};

/// Cyclic sum [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] over i < j < k.
inline JacobiReport check_jacobi(const BracketTable& t) {
  std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto& ctx = t.context();
        auto ei = basis_vector(ctx, n, i), ej = basis_vector(ctx, n, j), ek = basis_vector(ctx, n, k);
        PolyVector s = t.bracket(ei, t(j, k)) + t.bracket(ej, t(k, i)) + t.bracket(ek, t(i, j));
        if (!is_zero(s)) return {false, std::array<std::size_t, 3>{i, j, k}, s};
      }
  return {};
}

inline JacobiReport check_jacobi(const StructureConstants& sc) { return check_jacobi(BracketTable(sc)); }

struct DerivationReport {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> pair;  // first failing (i, j), 0-based
  PolyVector defect;  // M[e_i,e_j] - [Me_i,e_j] - [e_i,Me_j]
};

/// Finite-dimensional Lie algebra given by structure constants, possibly
/// depending polynomially on parameters. Jacobi is checked on construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(StructureConstants sc) : sc_(std::move(sc)), table_(sc_) {
    auto rep = check_jacobi(table_);
    if (!rep.ok) {
      const auto& [i, j, k] = *rep.triple;
      throw PreconditionError("structure constants of '" + sc_.name + "' violate the Jacobi identity on (e" +
                              std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" + std::to_string(k + 1) +
                              "): " + format_vector(rep.defect));
    }
  }

  static LieAlgebra abelian(const SymbolContext& ctx, std::size_t n, std::string name = "") {
    if (name.empty()) name = "R" + std::to_string(n);
    return LieAlgebra(StructureConstants{std::move(name), n, {}, ctx, {}});
  }

  const std::string& name() const { return sc_.name; }
  std::size_t dim() const { return sc_.dim; }
  const std::vector<std::string>& params() const { return sc_.params; }
  const SymbolContext& context() const { return sc_.context; }
  const StructureConstants& constants() const { return sc_; }
  const BracketTable& table() const { return table_; }

  LieAlgebra renamed(std::string name) const {
    StructureConstants sc = sc_;
    sc.name = std::move(name);
    return LieAlgebra(std::move(sc));
  }

  /// [e_i, e_j], 0-based.
  const PolyVector& bracket_basis(std::size_t i, std::size_t j) const { return table_(i, j); }
  PolyVector bracket(const PolyVector& a, const PolyVector& b) const { return table_.bracket(a, b); }

  bool is_abelian() const {
    for (const auto& e : sc_.entries)
      if (!plas::is_zero(e.value)) return false;
    return true;
  }

  /// True when no structure constant depends on a parameter.
  bool is_instantiated() const {
    for (const auto& e : sc_.entries)
      for (const auto& c : e.value)
        if (!c.is_constant()) return false;
    return true;
  }

  /// Substitutes parameter values; assigned parameters leave the parameter list.
  LieAlgebra instantiate(const Assignment& values) const {
    StructureConstants sc = sc_;
    for (auto& e : sc.entries)
      for (auto& c : e.value) c = c.substitute(values);
    std::erase_if(sc.params, [&](const std::string& p) { return values.count(p) > 0; });
    return LieAlgebra(std::move(sc));
  }

  /// Matrix of w -> [v, w].
  PolyMatrix ad_matrix(const PolyVector& v) const {
    std::size_t n = dim();
    if (v.size() != n) throw DimensionError("vector length does not match algebra dimension");
    PolyMatrix m(context(), n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero() || i == j) continue;
        const PolyVector& c = table_(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (!c[k].is_zero()) m(k, j) += v[i] * c[k];
      }
    return m;
  }

  DerivationReport is_derivation(const PolyMatrix& m) const {
    std::size_t n = dim();
    if (m.rows() != n || m.cols() != n) throw DimensionError("derivation candidate has wrong size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        PolyVector lhs = m * table_(i, j);
        PolyVector rhs = bracket(m.column(i), basis_vector(context(), n, j)) + bracket(basis_vector(context(), n, i), m.column(j));
        PolyVector d = lhs - rhs;
        if (!plas::is_zero(d)) return {false, std::pair{i, j}, d};
      }
    return {};
  }

  /// [x,[y,z]] = 0 for all basis triples, symbolically in the parameters.
  bool is_at_most_two_step() const {
    std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (!plas::is_zero(bracket(basis_vector(context(), n, i), table_(j, k)))) return false;
    return true;
  }

  /// Rational structure constants; throws when parameters remain.
  std::vector<std::vector<std::vector<Rational>>> rational_table() const {
    if (!is_instantiated())
      throw RequiresInstantiationError("algebra '" + name() + "' has uninstantiated parameters; supply values with --param");
    std::size_t n = dim();
    std::vector<std::vector<std::vector<Rational>>> t(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) t[i][j][k] = table_(i, j)[k].constant_value();
    return t;
  }

 private:
  StructureConstants sc_;
  BracketTable table_;
};

namespace detail {

using RatVec = std::vector<Rational>;

inline RatVec rat_bracket(const std::vector<std::vector<RatVec>>& t, const RatVec& a, const RatVec& b) {
  std::size_t n = a.size();
  RatVec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!t[i][j][k].is_zero()) r[k] += ab * t[i][j][k];
    }
  }
  return r;
}

// Row-reduced basis of the span of `vs`.
inline std::vector<RatVec> span_basis(const std::vector<RatVec>& vs, std::size_t n) {
  if (vs.empty()) return {};
  RatMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  std::size_t r = m.rref().size();
  std::vector<RatVec> out(r, RatVec(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m(i, j);
  return out;
}

inline std::vector<RatVec> standard_basis(std::size_t n) {
  std::vector<RatVec> b(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = Rational(1);
  return b;
}

}  // namespace detail

/// Dimensions of g = g_1 > g_2 = [g, g_1] > ... until the dimension stops
/// changing. A trailing 0 means the algebra is nilpotent.
inline std::vector<std::size_t> lower_central_series(const LieAlgebra& g) {
  auto t = g.rational_table();
  std::size_t n = g.dim();
  auto full = detail::standard_basis(n);
  std::vector<detail::RatVec> cur = full;
  std::vector<std::size_t> dims{n};
  while (!cur.empty()) {
    std::vector<detail::RatVec> gens;
    for (const auto& e : full)
      for (const auto& v : cur) gens.push_back(detail::rat_bracket(t, e, v));
    auto next = detail::span_basis(gens, n);
    if (next.size() == cur.size()) break;
    dims.push_back(next.size());
    cur = std::move(next);
  }
  return dims;
}

/// Dimensions of g > [g,g] > [[g,g],[g,g]] > ... until stabilization.
inline std::vector<std::size_t> derived_series(const LieAlgebra& g) {
  auto t = g.rational_table();
  std::size_t n = g.dim();
  std::vector<detail::RatVec> cur = detail::standard_basis(n);
  std::vector<std::size_t> dims{n};
  while (!cur.empty()) {
    std::vector<detail::RatVec> gens;
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b) gens.push_back(detail::rat_bracket(t, cur[a], cur[b]));
    auto next = detail::span_basis(gens, n);
    if (next.size() == cur.size()) break;
    dims.push_back(next.size());
    cur = std::move(next);
  }
  return dims;
}

/// Nilpotency class (number of steps), or nullopt when not nilpotent.
inline std::optional<std::size_t> nilpotency_class(const LieAlgebra& g) {
  auto dims = lower_central_series(g);
  if (dims.back() != 0) return std::nullopt;
  return dims.size() - 1;
}

inline bool is_nilpotent(const LieAlgebra& g) { return nilpotency_class(g).has_value(); }
inline bool is_solvable(const LieAlgebra& g) { return derived_series(g).back() == 0; }

/// Basis of Der(g) over Q. With `strictly_lower` only derivations whose
/// matrices are strictly lower triangular are returned.
inline std::vector<PolyMatrix> derivation_basis(const LieAlgebra& g, bool strictly_lower = false) {
  auto t = g.rational_table();
  std::size_t n = g.dim();
  auto var = [n](std::size_t a, std::size_t b) { return a * n + b; };
  std::vector<std::vector<Rational>> rows;
  // D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] = 0, coordinate k.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(n * n);
        for (std::size_t l = 0; l < n; ++l) {
          row[var(k, l)] += t[i][j][l];
          row[var(l, i)] -= t[l][j][k];
          row[var(l, j)] -= t[i][l][k];
        }
        rows.push_back(std::move(row));
      }
  if (strictly_lower)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        std::vector<Rational> row(n * n);
        row[var(a, b)] = Rational(1);
        rows.push_back(std::move(row));
      }
  RatMatrix sys(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) sys(r, c) = rows[r][c];
  std::vector<PolyMatrix> basis;
  for (const auto& v : sys.nullspace()) {
    PolyMatrix m(g.context(), n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) = MultiPoly(g.context(), v[var(a, b)]);
    basis.push_back(std::move(m));
  }
  return basis;
}

inline std::string format_bracket_list(const LieAlgebra& g, const std::string& basis = "e") {
  std::string out;
  for (const auto& e : g.constants().entries) {
    if (is_zero(e.value)) continue;
    std::string rhs;
    for (std::size_t k = 0; k < e.value.size(); ++k) {
      if (e.value[k].is_zero()) continue;
      std::string c = format_poly(e.value[k]);
      std::string term = basis + std::to_string(k + 1);
      std::string piece = c == "1" ? term : (c == "-1" ? "-" + term : (e.value[k].term_count() > 1 ? "(" + c + ")" : c) + "*" + term);
      if (rhs.empty())
        rhs = piece;
      else if (piece.front() == '-')
        rhs += " - " + piece.substr(1);
      else
        rhs += " + " + piece;
    }
    if (!out.empty()) out += ", ";
    out += "[" + basis + std::to_string(e.i + 1) + "," + basis + std::to_string(e.j + 1) + "] = " + rhs;
  }
  return out.empty() ? "abelian" : out;
}

}  // namespace plas

#endif  // PLAS_LIE_ALGEBRA_HPP
