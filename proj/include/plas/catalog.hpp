#ifndef PLAS_CATALOG_HPP
#define PLAS_CATALOG_HPP

#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plas/affine.hpp"
#include "plas/catalog_data.hpp"
#include "plas/json_io.hpp"
#include "plas/lie_algebra.hpp"
#include "plas/postlie.hpp"

namespace plas {

/// Interval constraint on one parameter, e.g. -1 <= lambda < 0, lambda != -1/2.
struct ParamDomain {
  std::string param;
  std::optional<Rational> min, max;
  bool min_inclusive = false, max_inclusive = false;
  std::vector<Rational> exclude;
  std::string text;

  bool contains(const Rational& v) const {
    if (min && (min_inclusive ? v < *min : v <= *min)) return false;
    if (max && (max_inclusive ? v > *max : v >= *max)) return false;
    for (const auto& e : exclude)
      if (v == e) return false;
    return true;
  }
};

struct CatalogRow {
  std::string id;
  std::string source;
  std::string g_name, h_name;
  Embedding embedding;
  PolyMatrix expected_L;
  std::string L_var;  // generic vector the expected L is written in
  PolyMatrix expected_R;
  std::string R_var;
  bool expected_R_nilpotent = false;
  bool expected_complete = true;
  Assignment default_params;
  std::vector<ParamDomain> domain;
  std::vector<std::string> corrections;  // printed values replaced by forced ones
  std::vector<std::string> notes;

  std::string domain_note() const {
    std::string out;
    for (const auto& d : domain) out += (out.empty() ? "" : "; ") + d.text;
    return out;
  }
};

struct Catalog {
  SymbolContext context;
  std::vector<LieAlgebra> algebras;
  std::vector<CatalogRow> rows;

  const LieAlgebra& algebra(const std::string& name) const {
    for (const auto& a : algebras)
      if (a.name() == name) return a;
    throw SchemaError("unknown algebra '" + name + "'");
  }
  const CatalogRow& row(const std::string& id) const {
    for (const auto& r : rows)
      if (r.id == id) return r;
    throw SchemaError("unknown catalog row '" + id + "'");
  }
  AlgebraResolver resolver() const {
    return [this](const std::string& name) { return algebra(name); };
  }
};

inline const json& catalog_document() {
  static const json doc = json::parse(catalog_json_text());
  return doc;
}

/// Parameter names used by the bundled catalog.
inline std::vector<std::string> catalog_params() { return catalog_document().at("params").get<std::vector<std::string>>(); }

inline SymbolContext default_catalog_context() {
  static const SymbolContext ctx = SymbolContext::standard(catalog_params(), catalog_document().at("dim").get<std::size_t>());
  return ctx;
}

/// Parses a catalog document in `ctx`, which must contain its parameters and x/y/z symbols.
inline Catalog parse_catalog(const json& doc, const SymbolContext& ctx) {
  Catalog cat{ctx, {}, {}};
  for (const auto& a : detail::require_key(doc, "algebras", "catalog"))
    cat.algebras.push_back(parse_algebra(a, ctx, "catalog algebra " + a.value("name", std::string("?"))));
  for (const auto& r : detail::require_key(doc, "rows", "catalog")) {
    CatalogRow row;
    row.id = detail::require_string(detail::require_key(r, "id", "catalog row"), "catalog row id");
    std::string w = "catalog row " + row.id;
    row.source = r.value("source", std::string());
    row.g_name = detail::require_string(detail::require_key(r, "g", w), w + ".g");
    row.h_name = detail::require_string(detail::require_key(r, "h", w), w + ".h");
    json emb = {{"map", detail::require_key(r, "embedding", w)}};
    row.embedding = parse_embedding_body(emb, cat.algebra(row.g_name), cat.algebra(row.h_name), w + ".embedding");
    const json& el = detail::require_key(r, "expected_L", w);
    row.L_var = el.value("var", std::string("y"));
    row.expected_L = parse_matrix(detail::require_key(el, "matrix", w + ".expected_L"), ctx, w + ".expected_L");
    const json& er = detail::require_key(r, "expected_R", w);
    row.R_var = er.value("var", std::string("z"));
    row.expected_R = parse_matrix(detail::require_key(er, "matrix", w + ".expected_R"), ctx, w + ".expected_R");
    row.expected_R_nilpotent = detail::require_key(r, "expected_R_nilpotent", w).get<bool>();
    row.expected_complete = detail::require_key(r, "expected_complete", w).get<bool>();
    if (r.contains("params"))
      for (const auto& [k, v] : r["params"].items()) row.default_params[k] = Rational::parse(v.get<std::string>());
    if (r.contains("domain"))
      for (const auto& d : r["domain"]) {
        ParamDomain pd;
        pd.param = d.at("param").get<std::string>();
        pd.text = d.value("text", std::string());
        if (d.contains("min")) {
          pd.min = Rational::parse(d["min"].get<std::string>());
          pd.min_inclusive = d.value("min_inclusive", false);
        }
        if (d.contains("max")) {
          pd.max = Rational::parse(d["max"].get<std::string>());
          pd.max_inclusive = d.value("max_inclusive", false);
        }
        if (d.contains("exclude"))
          for (const auto& x : d["exclude"]) pd.exclude.push_back(Rational::parse(x.get<std::string>()));
        row.domain.push_back(std::move(pd));
      }
    row.corrections = r.value("corrections", std::vector<std::string>{});
    row.notes = r.value("notes", std::vector<std::string>{});
    cat.rows.push_back(std::move(row));
  }
  return cat;
}

inline Catalog load_catalog(const SymbolContext& ctx) { return parse_catalog(catalog_document(), ctx); }
inline Catalog load_catalog() { return load_catalog(default_catalog_context()); }

struct RowReport {
  std::string id;
  std::map<std::string, Rational> params_used;
  std::vector<std::string> domain_violations;
  bool morphism_ok = false;
  std::string morphism_witness;
  bool t_bijective_ok = false;
  std::string det_t;
  bool induced_bracket_ok = false;  // g~ equals g transported by t
  bool axiom_commutator = false, axiom_associator = false, axiom_derivation = false;
  std::vector<std::string> axiom_witnesses;
  bool L_matches = false, R_matches = false;
  std::string L_actual, R_actual;
  bool R_nilpotent_actual = false, R_nilpotent_expected = false;
  bool complete_actual = false, complete_expected = false;
  bool shifted_caveat = false;  // h beyond 2-step, criterion evaluated anyway
  std::string shifted_char_poly;
  std::vector<std::string> mismatches;

  bool plas_axioms_ok() const { return axiom_commutator && axiom_associator && axiom_derivation; }
  bool ok() const { return mismatches.empty(); }
};

namespace detail {

inline PolyMatrix rename_generic(const PolyMatrix& m, const std::string& from, const std::string& to, std::size_t n) {
  if (from == to) return m;
  std::map<std::size_t, MultiPoly> images;
  const auto& ctx = m.context();
  for (std::size_t i = 1; i <= n; ++i)
    images.emplace(ctx.index(from + std::to_string(i)), MultiPoly::variable(ctx, to + std::to_string(i)));
  return m.map([&](const MultiPoly& p) { return p.compose(images); });
}

}  // namespace detail

/// Runs every check on one row. Parameters stay symbolic wherever possible;
/// `overrides` replaces the row's default sample values.
inline RowReport verify_row(const CatalogRow& row, const Assignment& overrides = {}) {
  RowReport rep;
  rep.id = row.id;
  rep.R_nilpotent_expected = row.expected_R_nilpotent;
  rep.complete_expected = row.expected_complete;
  Assignment params = row.default_params;
  auto uses = [&](const std::string& k) {
    const auto& gp = row.embedding.source.params();
    const auto& hp = row.embedding.target.params();
    return std::find(gp.begin(), gp.end(), k) != gp.end() || std::find(hp.begin(), hp.end(), k) != hp.end();
  };
  for (const auto& [k, v] : overrides)
    if (uses(k)) params[k] = v;
  for (const auto& [k, v] : params) rep.params_used.emplace(k, v);
  for (const auto& d : row.domain) {
    auto it = params.find(d.param);
    if (it != params.end() && !d.contains(it->second))
      rep.domain_violations.push_back(d.param + " = " + it->second.to_string() + " is outside " + d.text);
  }
  auto fail = [&](const std::string& what) { rep.mismatches.push_back(what); };
  try {
    const Embedding& e = row.embedding;
    std::size_t n = e.target.dim();
    const auto& ctx = e.context();

    auto mor = check_morphism(e);
    rep.morphism_ok = mor.ok;
    if (!mor.ok) {
      if (!mor.derivations_ok)
        rep.morphism_witness = "D(e" + std::to_string(*mor.bad_derivation + 1) + ") is not a derivation";
      else
        rep.morphism_witness = "(e" + std::to_string(mor.pair->first + 1) + ", e" + std::to_string(mor.pair->second + 1) +
                               "): defect " + format_aff(mor.defect);
      fail("embedding is not a morphism: " + rep.morphism_witness);
      return rep;
    }
    auto bij = t_bijective(e, params);
    rep.t_bijective_ok = bij.bijective;
    rep.det_t = format_poly(bij.determinant);
    if (!bij.bijective) {
      fail("t is not bijective (det " + rep.det_t + ")");
      return rep;
    }
    // t with parameters is inverted at the sample point; everything else stays symbolic.
    Embedding work = bij.symbolic ? e.instantiate(params) : e;
    PlasStructure p = induce_plas(work);

    rep.induced_bracket_ok = true;
    for (std::size_t i = 0; i < n && rep.induced_bracket_ok; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(p.g.bracket(work.t.column(i), work.t.column(j)) == work.t * work.source.bracket_basis(i, j))) {
          rep.induced_bracket_ok = false;
          break;
        }
    if (!rep.induced_bracket_ok) fail("induced bracket differs from " + row.g_name + " transported by t");

    auto ax = verify_plas(p);
    rep.axiom_commutator = ax.commutator.ok;
    rep.axiom_associator = ax.associator.ok;
    rep.axiom_derivation = ax.derivation.ok;
    for (const auto* a : {&ax.commutator, &ax.associator, &ax.derivation})
      if (!a->ok) rep.axiom_witnesses.push_back(a->witness);
    if (!ax.ok()) fail("PLAS axioms fail: " + rep.axiom_witnesses.front());

    PolyMatrix expected_L = bij.symbolic ? row.expected_L.substitute(params) : row.expected_L;
    PolyMatrix expected_R = bij.symbolic ? row.expected_R.substitute(params) : row.expected_R;
    PolyMatrix L = left_mult(p, generic_vector(ctx, row.L_var, n));
    PolyMatrix R = right_mult(p, generic_vector(ctx, row.R_var, n));
    rep.L_actual = format_matrix(L);
    rep.R_actual = format_matrix(R);
    rep.L_matches = L == expected_L;
    rep.R_matches = R == expected_R;
    if (!rep.L_matches) fail("L differs: computed " + rep.L_actual + ", expected " + format_matrix(expected_L));
    if (!rep.R_matches) fail("R differs: computed " + rep.R_actual + ", expected " + format_matrix(expected_R));

    PolyMatrix Ry = right_mult(p, generic_vector(ctx, "y", n));
    rep.R_nilpotent_actual = is_nilpotent(Ry);
    if (rep.R_nilpotent_actual != row.expected_R_nilpotent)
      fail(std::string("R nilpotent: computed ") + (rep.R_nilpotent_actual ? "true" : "false") + ", expected " +
           (row.expected_R_nilpotent ? "true" : "false"));

    rep.shifted_caveat = !p.h.is_at_most_two_step();
    PolyMatrix shifted = shifted_right(p);
    rep.complete_actual = rep.shifted_caveat ? is_nilpotent(shifted) : complete_2step(p);
    if (rep.shifted_caveat) {
      CharPoly cp = char_poly(shifted);
      rep.shifted_char_poly = cp.to_string(char_poly_variable(shifted));
    }
    if (rep.complete_actual != row.expected_complete)
      fail(std::string("complete: computed ") + (rep.complete_actual ? "true" : "false") + ", expected " +
           (row.expected_complete ? "true" : "false"));
  } catch (const std::exception& ex) {
    fail(std::string("error: ") + ex.what());
  }
  return rep;
}

struct CatalogSummary {
  std::vector<RowReport> reports;
  std::size_t mismatched_rows = 0;
  std::size_t domain_flagged_rows = 0;
  bool ok() const { return mismatched_rows == 0; }
};

/// Verifies the given rows; rows are independent, so they may run in parallel.
inline CatalogSummary verify_rows(const std::vector<const CatalogRow*>& rows, const Assignment& overrides = {}, bool parallel = true) {
  CatalogSummary s;
  if (parallel) {
    std::vector<std::future<RowReport>> jobs;
    for (const auto* r : rows) jobs.push_back(std::async(std::launch::async, [r, &overrides] { return verify_row(*r, overrides); }));
    for (auto& j : jobs) s.reports.push_back(j.get());
  } else {
    for (const auto* r : rows) s.reports.push_back(verify_row(*r, overrides));
  }
  for (const auto& r : s.reports) {
    if (!r.ok()) ++s.mismatched_rows;
    if (!r.domain_violations.empty()) ++s.domain_flagged_rows;
  }
  return s;
}

inline CatalogSummary verify_all(const Catalog& cat, const Assignment& overrides = {}, bool parallel = true) {
  std::vector<const CatalogRow*> rows;
  for (const auto& r : cat.rows) rows.push_back(&r);
  return verify_rows(rows, overrides, parallel);
}

}  // namespace plas

#endif  // PLAS_CATALOG_HPP
