#ifndef PLAS_AFFINE_HPP
#define PLAS_AFFINE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plas/errors.hpp"
#include "plas/lie_algebra.hpp"
#include "plas/poly_matrix.hpp"

namespace plas {

/// Element (x, D) of aff(h) = h x| Der(h).
struct AffElement {
  PolyVector translation;
  PolyMatrix derivation;

  bool is_zero() const { return plas::is_zero(translation) && derivation.is_zero(); }
  friend bool operator==(const AffElement&, const AffElement&) = default;
};

inline AffElement operator+(const AffElement& a, const AffElement& b) {
  return {a.translation + b.translation, a.derivation + b.derivation};
}
inline AffElement operator-(const AffElement& a, const AffElement& b) {
  return {a.translation - b.translation, a.derivation - b.derivation};
}
inline AffElement operator*(const Rational& s, const AffElement& a) { return {s * a.translation, s * a.derivation}; }

inline std::string format_aff(const AffElement& a) {
  return "(" + format_vector(a.translation) + ", " + format_matrix(a.derivation) + ")";
}

inline AffElement aff_zero(const LieAlgebra& h) {
  return {zero_vector(h.context(), h.dim()), PolyMatrix(h.context(), h.dim(), h.dim())};
}

/// [(x,D),(x',D')] = ([x,x']_h + D x' - D' x, DD' - D'D).
/// With `check_derivations` both D parts are verified to be derivations of h.
inline AffElement aff_bracket(const LieAlgebra& h, const AffElement& a, const AffElement& b, bool check_derivations = true) {
  std::size_t n = h.dim();
  for (const AffElement* e : {&a, &b}) {
    if (e->translation.size() != n || e->derivation.rows() != n || e->derivation.cols() != n)
      throw DimensionError("affine element does not match dim(h)");
    if (check_derivations && !h.is_derivation(e->derivation).ok)
      throw PreconditionError("derivation part is not a derivation of " + h.name());
  }
  return {h.bracket(a.translation, b.translation) + a.derivation * b.translation - b.derivation * a.translation,
          commutator(a.derivation, b.derivation)};
}

/// (n+1)x(n+1) block matrix [[D, x], [0, 0]].
inline PolyMatrix aff_to_matrix(const AffElement& a) {
  std::size_t n = a.translation.size();
  const auto& ctx = a.derivation.context();
  PolyMatrix m(ctx, n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a.derivation(i, j);
    m(i, n) = a.translation[i];
  }
  return m;
}

/// Lie algebra map phi: g -> aff(h), phi(v) = (t v, sum_i v_i D(e_i)).
struct Embedding {
  LieAlgebra source;  // g
  LieAlgebra target;  // h
  PolyMatrix t;       // dim h x dim g
  std::vector<PolyMatrix> d;  // D(e_i), one per source basis vector

  const SymbolContext& context() const { return target.context(); }

  void validate_shape() const {
    std::size_t n = target.dim(), m = source.dim();
    if (t.rows() != n || t.cols() != m) throw DimensionError("t must be dim(h) x dim(g)");
    if (d.size() != m) throw DimensionError("need one derivation per basis vector of g");
    for (const auto& di : d)
      if (di.rows() != n || di.cols() != n) throw DimensionError("each D(e_i) must be dim(h) x dim(h)");
    require_same_context(source.context(), target.context());
    require_same_context(t.context(), target.context());
  }

  /// D(v) for a coordinate vector v of g.
  PolyMatrix derivation_of(const PolyVector& v) const {
    if (v.size() != d.size()) throw DimensionError("vector length does not match dim(g)");
    PolyMatrix r(context(), target.dim(), target.dim());
    for (std::size_t i = 0; i < d.size(); ++i)
      if (!v[i].is_zero()) r = r + v[i] * d[i];
    return r;
  }

  AffElement image(const PolyVector& v) const { return {t * v, derivation_of(v)}; }
  AffElement image_of_basis(std::size_t i) const { return {t.column(i), d.at(i)}; }

  Embedding instantiate(const Assignment& values) const {
    Embedding e{source.instantiate(values), target.instantiate(values), t.substitute(values), {}};
    for (const auto& di : d) e.d.push_back(di.substitute(values));
    return e;
  }
};

struct MorphismReport {
  bool ok = true;
  bool derivations_ok = true;
  std::optional<std::size_t> bad_derivation;  // index i with D(e_i) not a derivation
  std::optional<std::pair<std::size_t, std::size_t>> pair;  // first failing (i, j)
  AffElement defect;  // [phi e_i, phi e_j] - phi([e_i, e_j]_g)
};

inline MorphismReport check_morphism(const Embedding& e) {
  e.validate_shape();
  MorphismReport rep;
  for (std::size_t i = 0; i < e.d.size(); ++i)
    if (!e.target.is_derivation(e.d[i]).ok) {
      rep.ok = rep.derivations_ok = false;
      rep.bad_derivation = i;
      return rep;
    }
  std::size_t m = e.source.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      AffElement lhs = aff_bracket(e.target, e.image_of_basis(i), e.image_of_basis(j), false);
      AffElement def = lhs - e.image(e.source.bracket_basis(i, j));
      if (!def.is_zero()) {
        rep.ok = false;
        rep.pair = std::pair{i, j};
        rep.defect = std::move(def);
        return rep;
      }
    }
  return rep;
}

struct BijectivityReport {
  bool bijective = false;
  MultiPoly determinant;
  bool symbolic = false;              // determinant depends on parameters
  std::optional<Rational> sampled;    // value at the supplied parameter point
};

/// det(t) must be a nonzero constant, or nonzero at `sample` when it depends on parameters.
inline BijectivityReport t_bijective(const Embedding& e, const Assignment& sample = {}) {
  BijectivityReport rep;
  if (!e.t.is_square()) {
    rep.determinant = MultiPoly(e.context());
    return rep;
  }
  rep.determinant = determinant(e.t);
  if (rep.determinant.is_constant()) {
    rep.bijective = !rep.determinant.is_zero();
    return rep;
  }
  rep.symbolic = true;
  bool covered = true;
  for (const auto& s : rep.determinant.used_symbols())
    if (!sample.count(s)) covered = false;
  if (covered) {
    rep.sampled = rep.determinant.eval(sample);
    rep.bijective = !rep.sampled->is_zero();
  }
  return rep;
}

/// Matrix with (i, j) entry the (j, i) cofactor.
inline PolyMatrix adjugate(const PolyMatrix& m) {
  m.require_square("adjugate");
  std::size_t n = m.rows();
  PolyMatrix adj(m.context(), n, n);
  if (n == 1) {
    adj(0, 0) = MultiPoly(m.context(), Rational(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(m.context(), n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      MultiPoly cof = determinant(minor);
      adj(j, i) = (i + j) % 2 ? -cof : cof;
    }
  return adj;
}

/// t^{-1}; det(t) must be a nonzero rational constant.
inline PolyMatrix t_inverse(const Embedding& e) {
  if (!e.t.is_square()) throw PreconditionError("t is not square");
  MultiPoly det = determinant(e.t);
  if (!det.is_constant() || det.is_zero())
    throw PreconditionError("t must have a nonzero constant determinant (got " + format_poly(det) +
                            "); instantiate parameters first");
  return (Rational(1) / det.constant_value()) * adjugate(e.t);
}

/// L_a = D(t^{-1} f_a) for every basis vector f_a of h.
inline std::vector<PolyMatrix> left_operators(const Embedding& e) {
  PolyMatrix tinv = t_inverse(e);
  std::vector<PolyMatrix> out;
  for (std::size_t a = 0; a < e.target.dim(); ++a) out.push_back(e.derivation_of(tinv.column(a)));
  return out;
}

namespace detail {

inline std::vector<std::string> union_params(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> out;
  for (const auto& name : a.context().names())
    if (std::find(a.params().begin(), a.params().end(), name) != a.params().end() ||
        std::find(b.params().begin(), b.params().end(), name) != b.params().end())
      out.push_back(name);
  return out;
}

}  // namespace detail

/// Bracket transported to h's coordinate space: [f_a, f_b] is the translation
/// part of [phi(t^{-1} f_a), phi(t^{-1} f_b)] in aff(h).
inline LieAlgebra induce_bracket(const Embedding& e, const std::string& name = "") {
  e.validate_shape();
  auto ls = left_operators(e);
  std::size_t n = e.target.dim();
  StructureConstants sc{name.empty() ? e.source.name() + "~" : name, n, detail::union_params(e.source, e.target),
                        e.context(), {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto fa = basis_vector(e.context(), n, a), fb = basis_vector(e.context(), n, b);
      PolyVector v = e.target.bracket_basis(a, b) + ls[a] * fb - ls[b] * fa;
      if (!is_zero(v)) sc.entries.push_back({a, b, std::move(v)});
    }
  return LieAlgebra(std::move(sc));
}

/// Rank of x -> (t x, D x) on Q^dim(g); parameters must be instantiated.
inline std::size_t embedding_rank(const Embedding& e) {
  std::size_t n = e.target.dim(), m = e.source.dim();
  RatMatrix stacked(n + n * n, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) stacked(i, j) = e.t(i, j).constant_value();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(n + r * n + c, j) = e.d[j](r, c).constant_value();
  }
  return stacked.rank();
}

/// The same g mapped into aff(V), V the underlying abelian space of h:
/// D'(e_i) = D(e_i) + 1/2 ad_{t e_i}.
inline Embedding compose_with_psi(const Embedding& e) {
  e.validate_shape();
  Embedding out{e.source, LieAlgebra::abelian(e.context(), e.target.dim(), "V"), e.t, {}};
  for (std::size_t i = 0; i < e.d.size(); ++i)
    out.d.push_back(e.d[i] + Rational(1, 2) * e.target.ad_matrix(e.t.column(i)));
  return out;
}

}  // namespace plas

#endif  // PLAS_AFFINE_HPP
