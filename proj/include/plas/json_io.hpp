#ifndef PLAS_JSON_IO_HPP
#define PLAS_JSON_IO_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "plas/affine.hpp"
#include "plas/errors.hpp"
#include "plas/lie_algebra.hpp"
#include "plas/poly_matrix.hpp"
#include "plas/poly_text.hpp"
#include "plas/postlie.hpp"

namespace plas {

using json = nlohmann::json;

/// Looks up algebras referenced by name.
using AlgebraResolver = std::function<LieAlgebra(const std::string&)>;

namespace detail {

inline const json& require_key(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing key '" + key + "'");
  return *it;
}

inline std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": expected a string");
  return j.get<std::string>();
}

inline std::size_t require_index(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer index");
  long v = j.get<long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim)
    throw SchemaError(where + ": index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

inline MultiPoly parse_entry(const json& j, const SymbolContext& ctx, const std::string& where) {
  if (j.is_number_integer()) return MultiPoly(ctx, Rational(j.get<long>()));
  std::string text = require_string(j, where);
  try {
    return parse_poly(text, ctx);
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what() + " in \"" + text + "\"");
  } catch (const UnboundSymbolError& e) {
    throw SchemaError(where + ": " + e.what() + " in \"" + text + "\"");
  }
}

// [{"k": int, "coeff": polystring}] -> dense vector.
inline PolyVector parse_sparse_vector(const json& j, const SymbolContext& ctx, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of {k, coeff}");
  PolyVector v = zero_vector(ctx, dim);
  for (std::size_t n = 0; n < j.size(); ++n) {
    std::string w = where + "[" + std::to_string(n) + "]";
    std::size_t k = require_index(require_key(j[n], "k", w), dim, w + ".k");
    v[k] += parse_entry(require_key(j[n], "coeff", w), ctx, w + ".coeff");
  }
  return v;
}

inline json sparse_vector_to_json(const PolyVector& v) {
  json out = json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back({{"k", k + 1}, {"coeff", format_poly(v[k])}});
  return out;
}

}  // namespace detail

/// Parameter names declared by an inline algebra object.
inline std::vector<std::string> declared_params(const json& algebra) {
  std::vector<std::string> out;
  if (algebra.is_object() && algebra.contains("params") && algebra["params"].is_array())
    for (const auto& p : algebra["params"])
      if (p.is_string()) out.push_back(p.get<std::string>());
  return out;
}

/// {"name", "dim", "params", "brackets": [{"i", "j", "value": [{"k", "coeff"}]}]}, 1-based, i < j.
/// Shape and symbols are validated; the Jacobi identity is not.
inline StructureConstants parse_structure_constants(const json& j, const SymbolContext& ctx, const std::string& where = "algebra") {
  StructureConstants sc;
  sc.context = ctx;
  sc.name = j.contains("name") ? detail::require_string(j["name"], where + ".name") : "unnamed";
  const json& dim = detail::require_key(j, "dim", where);
  if (!dim.is_number_integer() || dim.get<long>() < 1) throw SchemaError(where + ".dim: expected a positive integer");
  sc.dim = dim.get<std::size_t>();
  for (const auto& p : declared_params(j)) {
    if (!ctx.contains(p)) throw SchemaError(where + ".params: '" + p + "' is not a known symbol");
    sc.params.push_back(p);
  }
  if (j.contains("brackets")) {
    const json& br = j["brackets"];
    if (!br.is_array()) throw SchemaError(where + ".brackets: expected an array");
    for (std::size_t n = 0; n < br.size(); ++n) {
      std::string w = where + ".brackets[" + std::to_string(n) + "]";
      BracketEntry e;
      e.i = detail::require_index(detail::require_key(br[n], "i", w), sc.dim, w + ".i");
      e.j = detail::require_index(detail::require_key(br[n], "j", w), sc.dim, w + ".j");
      e.value = detail::parse_sparse_vector(detail::require_key(br[n], "value", w), ctx, sc.dim, w + ".value");
      sc.entries.push_back(std::move(e));
    }
  }
  try {
    BracketTable check(sc);
  } catch (const Error& e) {
    throw SchemaError(where + ": " + e.what());
  }
  return sc;
}

/// As parse_structure_constants, then Jacobi-checked (PreconditionError on failure).
inline LieAlgebra parse_algebra(const json& j, const SymbolContext& ctx, const std::string& where = "algebra") {
  return LieAlgebra(parse_structure_constants(j, ctx, where));
}

inline json algebra_to_json(const LieAlgebra& g) {
  json br = json::array();
  for (const auto& e : g.constants().entries)
    if (!is_zero(e.value)) br.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"value", detail::sparse_vector_to_json(e.value)}});
  return {{"name", g.name()}, {"dim", g.dim()}, {"params", g.params()}, {"brackets", br}};
}

/// Inline algebra object or a name handed to `resolve`.
inline LieAlgebra parse_algebra_ref(const json& j, const SymbolContext& ctx, const AlgebraResolver& resolve, const std::string& where) {
  if (j.is_string()) {
    if (!resolve) throw SchemaError(where + ": algebra names need a catalog");
    return resolve(j.get<std::string>());
  }
  return parse_algebra(j, ctx, where);
}

/// Row-major array of polynomial strings.
inline PolyMatrix parse_matrix(const json& j, const SymbolContext& ctx, const std::string& where = "matrix") {
  if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a non-empty array of rows");
  std::size_t cols = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].empty()) throw SchemaError(where + "[" + std::to_string(r) + "]: expected a non-empty row");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) throw SchemaError(where + ": ragged rows");
  }
  PolyMatrix m(ctx, j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = detail::parse_entry(j[r][c], ctx, where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  return m;
}

inline json matrix_to_json(const PolyMatrix& m) { return format_matrix_rows(m); }

inline json vector_to_json(const PolyVector& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(format_poly(p));
  return out;
}

namespace detail {

// Linear form in x1..xm -> coefficient row; rejects anything not homogeneous linear in x.
inline std::vector<MultiPoly> linear_coefficients(const MultiPoly& p, const SymbolContext& ctx, std::size_t m, const std::string& where) {
  std::vector<MultiPoly> coeffs;
  MultiPoly rebuilt(ctx);
  for (std::size_t k = 1; k <= m; ++k) {
    std::string xk = "x" + std::to_string(k);
    MultiPoly c = p.diff(ctx.index(xk));
    for (std::size_t l = 1; l <= m; ++l)
      if (c.uses(ctx.index("x" + std::to_string(l))))
        throw SchemaError(where + ": \"" + format_poly(p) + "\" is not linear in x");
    rebuilt += c * MultiPoly::variable(ctx, xk);
    coeffs.push_back(std::move(c));
  }
  if (!(rebuilt == p)) throw SchemaError(where + ": \"" + format_poly(p) + "\" is not a linear form in x1..x" + std::to_string(m));
  return coeffs;
}

}  // namespace detail

/// Builds t and D(e_i) from the map form x -> (translation(x), derivation(x)),
/// whose entries are linear forms in x1..x_dim(g).
inline Embedding embedding_from_map(const LieAlgebra& g, const LieAlgebra& h, const PolyVector& translation,
                                    const PolyMatrix& derivation, const std::string& where = "embedding") {
  const auto& ctx = h.context();
  std::size_t n = h.dim(), m = g.dim();
  if (translation.size() != n) throw SchemaError(where + ".translation: expected " + std::to_string(n) + " entries");
  if (derivation.rows() != n || derivation.cols() != n)
    throw SchemaError(where + ".derivation: expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  Embedding e{g, h, PolyMatrix(ctx, n, m), std::vector<PolyMatrix>(m, PolyMatrix(ctx, n, n))};
  for (std::size_t i = 0; i < n; ++i) {
    auto row = detail::linear_coefficients(translation[i], ctx, m, where + ".translation[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < m; ++k) e.t(i, k) = row[k];
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      auto row = detail::linear_coefficients(derivation(r, c), ctx, m, where + ".derivation");
      for (std::size_t k = 0; k < m; ++k) e.d[k](r, c) = row[k];
    }
  return e;
}

/// Parses the t/D part of an embedding object given its algebras.
/// Accepts {"t": [[...]], "D": [[[...]]]} or {"map": {"translation": [...], "derivation": [[...]]}}.
inline Embedding parse_embedding_body(const json& j, const LieAlgebra& g, const LieAlgebra& h, const std::string& where = "embedding") {
  const auto& ctx = h.context();
  if (j.contains("map")) {
    const json& mp = j["map"];
    const json& tr = detail::require_key(mp, "translation", where + ".map");
    if (!tr.is_array()) throw SchemaError(where + ".map.translation: expected an array");
    PolyVector translation;
    for (std::size_t i = 0; i < tr.size(); ++i)
      translation.push_back(detail::parse_entry(tr[i], ctx, where + ".map.translation[" + std::to_string(i) + "]"));
    PolyMatrix der = parse_matrix(detail::require_key(mp, "derivation", where + ".map"), ctx, where + ".map.derivation");
    return embedding_from_map(g, h, translation, der, where + ".map");
  }
  Embedding e{g, h, parse_matrix(detail::require_key(j, "t", where), ctx, where + ".t"), {}};
  const json& d = detail::require_key(j, "D", where);
  if (!d.is_array()) throw SchemaError(where + ".D: expected an array of matrices");
  for (std::size_t i = 0; i < d.size(); ++i) e.d.push_back(parse_matrix(d[i], ctx, where + ".D[" + std::to_string(i) + "]"));
  try {
    e.validate_shape();
  } catch (const DimensionError& err) {
    throw SchemaError(where + ": " + err.what());
  }
  return e;
}

/// {"g": algebra-ref, "h": algebra-ref, "t": ..., "D": ...} or with "map".
inline Embedding parse_embedding(const json& j, const SymbolContext& ctx, const AlgebraResolver& resolve = {}) {
  LieAlgebra g = parse_algebra_ref(detail::require_key(j, "g", "embedding"), ctx, resolve, "embedding.g");
  LieAlgebra h = parse_algebra_ref(detail::require_key(j, "h", "embedding"), ctx, resolve, "embedding.h");
  return parse_embedding_body(j, g, h);
}

inline json embedding_to_json(const Embedding& e) {
  json d = json::array();
  for (const auto& m : e.d) d.push_back(matrix_to_json(m));
  return {{"g", algebra_to_json(e.source)}, {"h", algebra_to_json(e.target)}, {"t", matrix_to_json(e.t)}, {"D", d}};
}

inline json product_to_json(const ProductTensor& p) {
  json out = json::array();
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      if (!is_zero(p.at(i, j))) out.push_back({{"i", i + 1}, {"j", j + 1}, {"value", detail::sparse_vector_to_json(p.at(i, j))}});
  return out;
}

/// {"h": algebra-ref, "g": algebra-ref | "induced", "product": [{"i", "j", "value"}]}.
/// With "induced" the g bracket is recovered as x.y - y.x + [x,y]_h.
inline PlasStructure parse_plas(const json& j, const SymbolContext& ctx, const AlgebraResolver& resolve = {}) {
  LieAlgebra h = parse_algebra_ref(detail::require_key(j, "h", "plas"), ctx, resolve, "plas.h");
  std::size_t n = h.dim();
  ProductTensor p(ctx, n);
  const json& prod = detail::require_key(j, "product", "plas");
  if (!prod.is_array()) throw SchemaError("plas.product: expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < prod.size(); ++k) {
    std::string w = "plas.product[" + std::to_string(k) + "]";
    std::size_t a = detail::require_index(detail::require_key(prod[k], "i", w), n, w + ".i");
    std::size_t b = detail::require_index(detail::require_key(prod[k], "j", w), n, w + ".j");
    if (!seen.insert({a, b}).second) throw SchemaError(w + ": product entry given twice");
    p.at(a, b) = detail::parse_sparse_vector(detail::require_key(prod[k], "value", w), ctx, n, w + ".value");
  }
  const json& gj = detail::require_key(j, "g", "plas");
  LieAlgebra g = gj.is_string() && gj.get<std::string>() == "induced" ? bracket_from_product(h, p, "g")
                                                                      : parse_algebra_ref(gj, ctx, resolve, "plas.g");
  if (g.dim() != n) throw SchemaError("plas: g and h have different dimensions");
  return {g, h, p};
}

inline json plas_to_json(const PlasStructure& p) {
  return {{"h", algebra_to_json(p.h)}, {"g", algebra_to_json(p.g)}, {"product", product_to_json(p.product)}};
}

/// Every parameter name declared anywhere in a document (inline algebras, "params" lists).
inline std::vector<std::string> collect_declared_params(const json& doc) {
  std::vector<std::string> out;
  std::function<void(const json&)> walk = [&](const json& j) {
    if (j.is_object()) {
      for (const auto& p : declared_params(j))
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
      for (const auto& [k, v] : j.items()) walk(v);
    } else if (j.is_array()) {
      for (const auto& v : j) walk(v);
    }
  };
  walk(doc);
  return out;
}

/// Largest "dim" of any inline algebra in a document.
inline std::size_t max_declared_dim(const json& doc) {
  std::size_t best = 0;
  std::function<void(const json&)> walk = [&](const json& j) {
    if (j.is_object()) {
      if (j.contains("dim") && j["dim"].is_number_integer() && j["dim"].get<long>() > 0)
        best = std::max(best, j["dim"].get<std::size_t>());
      for (const auto& [k, v] : j.items()) walk(v);
    } else if (j.is_array()) {
      for (const auto& v : j) walk(v);
    }
  };
  walk(doc);
  return best;
}

}  // namespace plas

#endif  // PLAS_JSON_IO_HPP
