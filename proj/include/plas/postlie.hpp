#ifndef PLAS_POSTLIE_HPP
#define PLAS_POSTLIE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plas/affine.hpp"
#include "plas/errors.hpp"
#include "plas/lie_algebra.hpp"
#include "plas/poly_matrix.hpp"
#include "plas/upoly.hpp"

namespace plas {

/// e_i . e_j = sum_k P_ij^k e_k.
class ProductTensor {
 public:
  ProductTensor() = default;
  ProductTensor(const SymbolContext& ctx, std::size_t n) : ctx_(ctx), n_(n), p_(n * n, zero_vector(ctx, n)) {}

  /// From the left multiplications L_{e_i}: P_ij = L_{e_i} e_j.
  static ProductTensor from_left_operators(const SymbolContext& ctx, const std::vector<PolyMatrix>& ls) {
    ProductTensor t(ctx, ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = 0; j < ls.size(); ++j) t.at(i, j) = ls[i].column(j);
    return t;
  }

  std::size_t dim() const { return n_; }
  const SymbolContext& context() const { return ctx_; }
  PolyVector& at(std::size_t i, std::size_t j) { return p_.at(i * n_ + j); }
  const PolyVector& at(std::size_t i, std::size_t j) const { return p_.at(i * n_ + j); }

  PolyVector multiply(const PolyVector& u, const PolyVector& v) const {
    if (u.size() != n_ || v.size() != n_) throw DimensionError("vector length does not match product dimension");
    PolyVector r = zero_vector(ctx_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (v[j].is_zero() || plas::is_zero(at(i, j))) continue;
        r = r + (u[i] * v[j]) * at(i, j);
      }
    }
    return r;
  }

  /// L_{e_i}: column j is e_i . e_j.
  PolyMatrix left_basis(std::size_t i) const {
    PolyMatrix m(ctx_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) m(k, j) = at(i, j)[k];
    return m;
  }

  /// Matrix of y -> x . y.
  PolyMatrix left(const PolyVector& x) const {
    if (x.size() != n_) throw DimensionError("vector length does not match product dimension");
    PolyMatrix m(ctx_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (!x[i].is_zero()) m = m + x[i] * left_basis(i);
    return m;
  }

  /// Matrix of x -> x . y.
  PolyMatrix right(const PolyVector& y) const {
    if (y.size() != n_) throw DimensionError("vector length does not match product dimension");
    PolyMatrix m(ctx_, n_, n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        if (y[b].is_zero()) continue;
        for (std::size_t k = 0; k < n_; ++k)
          if (!at(a, b)[k].is_zero()) m(k, a) += y[b] * at(a, b)[k];
      }
    return m;
  }

  ProductTensor substitute(const Assignment& values) const {
    ProductTensor r = *this;
    for (auto& v : r.p_)
      for (auto& c : v) c = c.substitute(values);
    return r;
  }

  friend bool operator==(const ProductTensor& a, const ProductTensor& b) { return a.n_ == b.n_ && a.p_ == b.p_; }

 private:
  SymbolContext ctx_;
  std::size_t n_ = 0;
  std::vector<PolyVector> p_;
};

/// Post-Lie algebra structure: brackets of g and h on one space plus x . y.
struct PlasStructure {
  LieAlgebra g;
  LieAlgebra h;
  ProductTensor product;

  const SymbolContext& context() const { return h.context(); }
  std::size_t dim() const { return h.dim(); }
};

/// Left-symmetric structure on g.
struct LsStructure {
  LieAlgebra g;
  ProductTensor product;

  std::size_t dim() const { return g.dim(); }
};

inline PolyMatrix left_mult(const PlasStructure& p, const PolyVector& x) { return p.product.left(x); }
inline PolyMatrix right_mult(const PlasStructure& p, const PolyVector& y) { return p.product.right(y); }
inline PolyMatrix left_mult(const LsStructure& p, const PolyVector& x) { return p.product.left(x); }
inline PolyMatrix right_mult(const LsStructure& p, const PolyVector& y) { return p.product.right(y); }

/// Builds the PLAS of an embedding: L_x = D(t^{-1} x), g the induced bracket, h the target.
inline PlasStructure induce_plas(const Embedding& e) {
  auto mor = check_morphism(e);
  if (!mor.ok) throw PreconditionError("embedding is not a Lie algebra morphism into aff(" + e.target.name() + ")");
  auto ls = left_operators(e);
  return {induce_bracket(e), e.target, ProductTensor::from_left_operators(e.context(), ls)};
}

/// [x,y]_g recovered from the product: x.y - y.x + [x,y]_h.
inline LieAlgebra bracket_from_product(const LieAlgebra& h, const ProductTensor& p, const std::string& name = "g") {
  std::size_t n = h.dim();
  if (p.dim() != n) throw DimensionError("product and algebra dimensions differ");
  StructureConstants sc{name, n, h.params(), h.context(), {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      PolyVector v = p.at(a, b) - p.at(b, a) + h.bracket_basis(a, b);
      if (!is_zero(v)) sc.entries.push_back({a, b, std::move(v)});
    }
  return LieAlgebra(std::move(sc));
}

struct AxiomResult {
  bool ok = true;
  std::string witness;  // first failing basis tuple and defect
};

struct PlasAxiomReport {
  AxiomResult commutator;   // x.y - y.x = [x,y]_g - [x,y]_h
  AxiomResult associator;   // [x,y]_g . z = x.(y.z) - y.(x.z)
  AxiomResult derivation;   // L_x in Der(h)
  bool ok() const { return commutator.ok && associator.ok && derivation.ok; }
};

namespace detail {

inline std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

inline AxiomResult check_commutator_axiom(const LieAlgebra& g, const LieAlgebra* h, const ProductTensor& p) {
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      PolyVector rhs = g.bracket_basis(i, j);
      if (h) rhs = rhs - h->bracket_basis(i, j);
      PolyVector d = p.at(i, j) - p.at(j, i) - rhs;
      if (!is_zero(d)) return {false, "(" + basis_name(i) + ", " + basis_name(j) + "): defect " + format_vector(d)};
    }
  return {};
}

inline AxiomResult check_associator_axiom(const LieAlgebra& g, const ProductTensor& p) {
  std::size_t n = g.dim();
  const auto& ctx = g.context();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto ei = basis_vector(ctx, n, i), ej = basis_vector(ctx, n, j), ek = basis_vector(ctx, n, k);
        PolyVector lhs = p.multiply(g.bracket_basis(i, j), ek);
        PolyVector rhs = p.multiply(ei, p.at(j, k)) - p.multiply(ej, p.at(i, k));
        PolyVector d = lhs - rhs;
        if (!is_zero(d))
          return {false, "(" + basis_name(i) + ", " + basis_name(j) + ", " + basis_name(k) + "): defect " + format_vector(d)};
      }
  return {};
}

}  // namespace detail

/// All axioms are multilinear, so basis tuples suffice.
inline PlasAxiomReport verify_plas(const PlasStructure& p) {
  if (p.g.dim() != p.h.dim() || p.product.dim() != p.h.dim()) throw DimensionError("PLAS components differ in dimension");
  PlasAxiomReport rep;
  rep.commutator = detail::check_commutator_axiom(p.g, &p.h, p.product);
  rep.associator = detail::check_associator_axiom(p.g, p.product);
  for (std::size_t i = 0; i < p.dim() && rep.derivation.ok; ++i) {
    auto d = p.h.is_derivation(p.product.left_basis(i));
    if (!d.ok)
      rep.derivation = {false, "L_" + detail::basis_name(i) + " on (" + detail::basis_name(d.pair->first) + ", " +
                                   detail::basis_name(d.pair->second) + "): defect " + format_vector(d.defect)};
  }
  return rep;
}

struct LsAxiomReport {
  AxiomResult commutator;  // x.y - y.x = [x,y]_g
  AxiomResult associator;
  bool ok() const { return commutator.ok && associator.ok; }
};

inline LsAxiomReport verify_ls(const LsStructure& s) {
  if (s.product.dim() != s.g.dim()) throw DimensionError("LS components differ in dimension");
  return {detail::check_commutator_axiom(s.g, nullptr, s.product), detail::check_associator_axiom(s.g, s.product)};
}

/// x .~ y = x . y + 1/2 [x,y]_h; needs h at most 2-step.
inline LsStructure psi_push(const PlasStructure& p) {
  if (!p.h.is_at_most_two_step())
    throw PreconditionError("psi push-forward needs h to be at most 2-step nilpotent; " + p.h.name() + " is not");
  ProductTensor q = p.product;
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) q.at(i, j) = q.at(i, j) + Rational(1, 2) * p.h.bracket_basis(i, j);
  return {p.g, q};
}

/// (x, D) -> (x, D + 1/2 ad_x).
inline AffElement psi_map(const LieAlgebra& h, const AffElement& a) {
  return {a.translation, a.derivation + Rational(1, 2) * h.ad_matrix(a.translation)};
}

struct PsiMorphismReport {
  bool ok = true;
  std::string pair;     // description of the first failing test pair
  AffElement defect;    // [psi a, psi b]_aff(V) - psi([a,b]_aff(h))
  std::size_t pairs_checked = 0;
};

/// Tests psi on ((e_i,0),(e_j,0)), ((e_i,0),(0,D_k)), ((0,D_k),(0,D_l)) with
/// D_k a basis of Der(h). Needs instantiated structure constants.
inline PsiMorphismReport psi_is_morphism(const LieAlgebra& h) {
  std::size_t n = h.dim();
  const auto& ctx = h.context();
  LieAlgebra v = LieAlgebra::abelian(ctx, n, "V");
  auto ders = derivation_basis(h);
  PolyMatrix zero_m(ctx, n, n);
  PolyVector zero_v = zero_vector(ctx, n);
  struct Named {
    std::string name;
    AffElement el;
  };
  std::vector<Named> trans, der;
  for (std::size_t i = 0; i < n; ++i) trans.push_back({"(f" + std::to_string(i + 1) + ",0)", {basis_vector(ctx, n, i), zero_m}});
  for (std::size_t k = 0; k < ders.size(); ++k) der.push_back({"(0,D" + std::to_string(k + 1) + ")", {zero_v, ders[k]}});

  PsiMorphismReport rep;
  auto test = [&](const Named& a, const Named& b) {
    if (!rep.ok) return;
    ++rep.pairs_checked;
    AffElement lhs = aff_bracket(v, psi_map(h, a.el), psi_map(h, b.el), false);
    AffElement rhs = psi_map(h, aff_bracket(h, a.el, b.el, false));
    AffElement d = lhs - rhs;
    if (!d.is_zero()) {
      rep.ok = false;
      rep.pair = "(" + a.name + ", " + b.name + ")";
      rep.defect = std::move(d);
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) test(trans[i], trans[j]);
  for (const auto& a : trans)
    for (const auto& b : der) test(a, b);
  for (std::size_t k = 0; k < der.size(); ++k)
    for (std::size_t l = k + 1; l < der.size(); ++l) test(der[k], der[l]);
  return rep;
}

/// R_y - c ad_y for a rational c and generic y.
inline PolyMatrix shifted_right(const PlasStructure& p, const Rational& c = Rational(1, 2)) {
  PolyVector y = generic_vector(p.context(), "y", p.dim());
  return right_mult(p, y) - c * p.h.ad_matrix(y);
}

/// R_y - 1/2 ad_y nilpotent for every y; h must be at most 2-step.
inline bool complete_2step(const PlasStructure& p) {
  if (!p.h.is_at_most_two_step())
    throw PreconditionError("the shifted criterion needs h to be at most 2-step nilpotent; " + p.h.name() + " is not");
  return is_nilpotent(shifted_right(p));
}

struct CompletenessReport {
  bool right_nilpotent = false;    // R_y nilpotent
  bool left_nilpotent = false;     // L_x nilpotent
  bool shifted_nilpotent = false;  // R_y - 1/2 ad_y nilpotent
  bool shifted_caveat = false;     // h is not at most 2-step, so the shifted criterion is outside its range
  MultiPoly unit_shift_det;        // det(I + R_y - 1/2 ad_y)
};

inline CompletenessReport completeness_report(const PlasStructure& p) {
  std::size_t n = p.dim();
  const auto& ctx = p.context();
  CompletenessReport rep;
  rep.right_nilpotent = is_nilpotent(right_mult(p, generic_vector(ctx, "y", n)));
  rep.left_nilpotent = is_nilpotent(left_mult(p, generic_vector(ctx, "x", n)));
  PolyMatrix s = shifted_right(p);
  rep.shifted_nilpotent = is_nilpotent(s);
  rep.shifted_caveat = !p.h.is_at_most_two_step();
  rep.unit_shift_det = determinant(PolyMatrix::identity(ctx, n) + s);
  return rep;
}

/// Rational c with R_y - c ad_y nilpotent as an identity in y (and any
/// remaining parameters). `all` marks that every c works.
struct ShiftLocus {
  bool all = false;
  std::vector<Rational> values;           // convention R_y - c ad_y
  std::vector<Rational> opposite_values;  // convention R_y + c ad_y
};

inline ShiftLocus shift_nilpotency_locus(const PlasStructure& p) {
  std::size_t n = p.dim();
  const auto& ctx = p.context();
  PolyVector y = generic_vector(ctx, "y", n);
  if (!is_nilpotent(p.h.ad_matrix(y))) throw PreconditionError("shift locus needs a nilpotent h");
  std::string cname = ctx.fresh_name("c");
  SymbolContext ext = ctx.extended({cname});
  std::size_t cvar = ext.index(cname);
  PolyMatrix s = right_mult(p, y).lift(ext) - MultiPoly::variable(ext, cname) * p.h.ad_matrix(y).lift(ext);
  PolyMatrix power = s.pow(static_cast<unsigned>(n));

  // Coefficient of each non-c monomial, as a polynomial in c.
  std::map<std::pair<std::size_t, Monomial>, std::vector<Rational>> groups;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, coef] : power(i, j).terms()) {
        Monomial rest = m;
        std::size_t k = rest[cvar];
        rest[cvar] = 0;
        auto& v = groups[{i * n + j, rest}];
        if (v.size() <= k) v.resize(k + 1);
        v[k] += coef;
      }
  ShiftLocus locus;
  std::optional<UPoly> g;
  for (auto& [key, coeffs] : groups) {
    UPoly q(std::move(coeffs));
    if (q.is_zero()) continue;
    g = g ? gcd(*g, q) : q.monic();
  }
  if (!g) {
    locus.all = true;
    return locus;
  }
  if (g->degree() > 0) locus.values = rational_roots(*g);
  for (auto it = locus.values.rbegin(); it != locus.values.rend(); ++it) locus.opposite_values.push_back(-*it);
  return locus;
}

/// Does R_y nilpotency agree with the shifted criterion? Evidence only.
struct RightNilpotencyProbe {
  bool right_nilpotent = false;
  bool complete = false;
  bool agree() const { return right_nilpotent == complete; }
};

inline RightNilpotencyProbe right_nilpotency_probe(const PlasStructure& p) {
  return {is_nilpotent(right_mult(p, generic_vector(p.context(), "y", p.dim()))), complete_2step(p)};
}

}  // namespace plas

#endif  // PLAS_POSTLIE_HPP
