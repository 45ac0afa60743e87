// Shared fixtures and independent oracles for the test suites.
#ifndef PLAS_TESTS_SUPPORT_HPP
#define PLAS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "plas/plas.hpp"

namespace plas::test {

/// Catalog symbol context (lambda, mu, gamma, delta, x1..x4, y1..y4, z1..z4).
inline const SymbolContext& ctx() {
  static const SymbolContext c = default_catalog_context();
  return c;
}

inline const Catalog& catalog() {
  static const Catalog c = load_catalog(ctx());
  return c;
}

inline MultiPoly P(const std::string& s) { return parse_poly(s, ctx()); }
inline PolyMatrix M(const std::vector<std::vector<std::string>>& rows) { return PolyMatrix::parse(ctx(), rows); }
inline PolyVector V(const std::vector<std::string>& entries) {
  PolyVector v;
  for (const auto& e : entries) v.push_back(P(e));
  return v;
}
inline PolyVector gen(const std::string& prefix, std::size_t n) { return generic_vector(ctx(), prefix, n); }
inline PolyVector e(std::size_t n, std::size_t i) { return basis_vector(ctx(), n, i); }

inline LieAlgebra algebra(const std::string& name) { return catalog().algebra(name); }

/// Embedding from a translation vector and derivation matrix linear in x1..x_m.
inline Embedding embed(const std::string& g, const std::string& h, const std::vector<std::string>& translation,
                       const std::vector<std::vector<std::string>>& derivation) {
  return embedding_from_map(algebra(g), algebra(h), V(translation), M(derivation));
}

/// The rotation embedding r'3_0 -> aff(h3) of the worked example.
inline Embedding rotation_embedding() {
  return embed("r'3_0", "h3", {"x2", "x3", "x1"}, {{"0", "-x1", "0"}, {"x1", "0", "0"}, {"1/2*x3", "-1/2*x2", "0"}});
}

// ---- oracles ---------------------------------------------------------------

/// Determinant by the Leibniz permutation sum.
inline MultiPoly leibniz_det(const PolyMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly sum(m.context());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    MultiPoly term(m.context(), Rational(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// Coefficients of det(s I - M), s a fresh symbol, by the Leibniz sum.
inline std::vector<MultiPoly> char_poly_by_det(const PolyMatrix& m) {
  std::string s = m.context().fresh_name("s");
  SymbolContext ext = m.context().extended({s});
  std::size_t n = m.rows();
  PolyMatrix a = MultiPoly::variable(ext, s) * PolyMatrix::identity(ext, n) - m.lift(ext);
  MultiPoly d = leibniz_det(a);
  std::size_t sv = ext.index(s);
  std::vector<MultiPoly> coeffs(n + 1, MultiPoly(m.context()));
  for (const auto& [mono, c] : d.terms()) {
    Monomial rest(mono.begin(), mono.end() - 1);
    coeffs[mono[sv]] += MultiPoly::term(m.context(), rest, c);
  }
  return coeffs;
}

/// M^k by repeated multiplication.
inline PolyMatrix naive_pow(const PolyMatrix& m, unsigned k) {
  PolyMatrix r = PolyMatrix::identity(m.context(), m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

/// Rank over Q by fraction-keeping Gaussian elimination on a copy of the rows.
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<Rational> constant_coords(const PolyVector& v) {
  std::vector<Rational> out;
  for (const auto& p : v) out.push_back(p.constant_value());
  return out;
}

// ---- random data -----------------------------------------------------------

inline Rational random_rational(std::mt19937& rng, int num_range = 5, int den_max = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_max);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

/// Random polynomial in the given symbols.
inline MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& symbols, std::size_t max_terms,
                             unsigned max_degree) {
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  MultiPoly p(ctx());
  std::size_t k = nterms(rng);
  for (std::size_t t = 0; t < k; ++t) {
    MultiPoly term(ctx(), random_rational(rng));
    unsigned d = deg(rng);
    for (unsigned i = 0; i < d; ++i) term = term * MultiPoly::variable(ctx(), symbols[pick(rng)]);
    p += term;
  }
  return p;
}

inline PolyMatrix random_rational_matrix(std::mt19937& rng, std::size_t n, int range = 3) {
  PolyMatrix m(ctx(), n, n);
  std::uniform_int_distribution<int> d(-range, range);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = MultiPoly(ctx(), Rational(d(rng)));
  return m;
}

/// Random linear form coefficients applied to the basis: sum_k c_k basis[k].
inline PolyMatrix random_combination(std::mt19937& rng, const std::vector<PolyMatrix>& basis) {
  PolyMatrix r(ctx(), basis.at(0).rows(), basis.at(0).cols());
  for (const auto& b : basis) r = r + random_rational(rng) * b;
  return r;
}

}  // namespace plas::test

#endif  // PLAS_TESTS_SUPPORT_HPP
