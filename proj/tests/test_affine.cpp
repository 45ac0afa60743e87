#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace plas;
using namespace plas::test;

namespace {

AffElement random_aff(std::mt19937& rng, const LieAlgebra& h, const std::vector<PolyMatrix>& ders) {
  AffElement a = aff_zero(h);
  for (std::size_t i = 0; i < h.dim(); ++i) a.translation[i] = random_poly(rng, {"x1", "x2", "y1"}, 2, 2);
  for (const auto& D : ders) a.derivation = a.derivation + random_poly(rng, {"x1", "y2"}, 2, 1) * D;
  return a;
}

const CatalogRow& row(const std::string& id) { return catalog().row(id); }

}  // namespace

TEST_CASE("aff bracket specializations", "[aff]") {
  LieAlgebra h3 = algebra("h3");
  PolyMatrix zero(ctx(), 3, 3);
  AffElement a{gen("x", 3), zero}, b{gen("y", 3), zero};
  AffElement ab = aff_bracket(h3, a, b);
  CHECK(ab.translation == h3.bracket(gen("x", 3), gen("y", 3)));
  CHECK(ab.derivation.is_zero());

  PolyMatrix D = M({{"1", "0", "0"}, {"0", "2", "0"}, {"0", "0", "3"}});
  REQUIRE(h3.is_derivation(D).ok);
  AffElement dx = aff_bracket(h3, {zero_vector(ctx(), 3), D}, b);
  CHECK(dx.translation == D * gen("y", 3));
  CHECK(dx.derivation.is_zero());

  Embedding rot = rotation_embedding();
  AffElement img = aff_bracket(h3, rot.image_of_basis(0), rot.image_of_basis(1));
  CHECK(img == rot.image(e(3, 2)));

  CHECK_THROWS_AS(aff_bracket(h3, {zero_vector(ctx(), 3), PolyMatrix::identity(ctx(), 3)}, b), PreconditionError);
  CHECK_THROWS_AS(aff_bracket(h3, {gen("x", 4), zero}, b), DimensionError);
}

TEST_CASE("aff(h3) is a Lie algebra on random triples", "[aff][property]") {
  std::mt19937 rng(8);
  LieAlgebra h3 = algebra("h3");
  auto ders = derivation_basis(h3);
  for (int trial = 0; trial < 25; ++trial) {
    AffElement a = random_aff(rng, h3, ders), b = random_aff(rng, h3, ders), c = random_aff(rng, h3, ders);
    CHECK((aff_bracket(h3, a, b) + aff_bracket(h3, b, a)).is_zero());
    AffElement j = aff_bracket(h3, a, aff_bracket(h3, b, c)) + aff_bracket(h3, b, aff_bracket(h3, c, a)) +
                   aff_bracket(h3, c, aff_bracket(h3, a, b));
    CHECK(j.is_zero());
  }
}

TEST_CASE("matrix representation of affine elements", "[aff]") {
  LieAlgebra h3 = algebra("h3");
  AffElement a{gen("x", 3), Rational(1, 2) * h3.ad_matrix(gen("x", 3))};
  PolyMatrix m = aff_to_matrix(a);
  CHECK(m.rows() == 4);
  CHECK((m * m).is_zero());
  CHECK(aff_to_matrix(aff_zero(h3)).is_zero());
  PolyMatrix D = M({{"1", "0", "0"}, {"0", "2", "0"}, {"0", "0", "3"}});
  PolyMatrix md = aff_to_matrix({zero_vector(ctx(), 3), D});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(md(i, j) == (i < 3 && j < 3 ? D(i, j) : P("0")));
}

TEST_CASE("matrix representation is a homomorphism for abelian h", "[aff][property]") {
  // The block-matrix commutator recovers D x' - D' x; for abelian h this is the full bracket.
  std::mt19937 rng(9);
  LieAlgebra r3 = algebra("R3");
  auto ders = derivation_basis(r3);
  for (int trial = 0; trial < 25; ++trial) {
    AffElement a = random_aff(rng, r3, ders), b = random_aff(rng, r3, ders);
    CHECK(commutator(aff_to_matrix(a), aff_to_matrix(b)) == aff_to_matrix(aff_bracket(r3, a, b)));
  }
}

TEST_CASE("morphism check", "[aff][morphism]") {
  CHECK(check_morphism(rotation_embedding()).ok);

  Embedding bent = embed("r'3_0", "h3", {"x2", "x3", "x1"}, {{"0", "-x1", "0"}, {"x1", "0", "0"}, {"x3", "-1/2*x2", "0"}});
  MorphismReport r = check_morphism(bent);
  CHECK_FALSE(r.ok);
  CHECK(r.derivations_ok);
  REQUIRE(r.pair.has_value());
  CHECK(*r.pair == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(r.defect.translation == zero_vector(ctx(), 3));
  CHECK(r.defect.derivation == M({{"0", "0", "0"}, {"0", "0", "0"}, {"-1/2", "0", "0"}}));

  Embedding nonder = embed("R3", "h3", {"x1", "x2", "x3"}, {{"x1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}});
  MorphismReport rn = check_morphism(nonder);
  CHECK_FALSE(rn.derivations_ok);
  CHECK(rn.bad_derivation == 0u);
}

TEST_CASE("every catalog embedding is an injective morphism with bijective t", "[aff][catalog]") {
  for (const auto& r : catalog().rows) {
    INFO(r.id);
    CHECK(check_morphism(r.embedding).ok);
    Assignment params = r.default_params;
    BijectivityReport b = t_bijective(r.embedding, params);
    CHECK(b.bijective);
    Embedding inst = r.embedding.instantiate(params);
    Assignment extra;
    for (const auto& p : catalog_params()) extra[p] = Rational(1, 3);
    for (const auto& [k, v] : params) extra[k] = v;
    CHECK(embedding_rank(r.embedding.instantiate(extra)) == r.embedding.source.dim());
    LieAlgebra gt = induce_bracket(inst);
    CHECK(check_jacobi(gt.constants()).ok);
  }
}

TEST_CASE("t-bijectivity", "[aff][bijective]") {
  BijectivityReport r = t_bijective(rotation_embedding());
  CHECK(r.bijective);
  CHECK(abs(r.determinant.constant_value()) == Rational(1));

  LieAlgebra r3 = algebra("R3");
  Embedding zero{r3, r3, PolyMatrix(ctx(), 3, 3), {PolyMatrix(ctx(), 3, 3), PolyMatrix(ctx(), 3, 3), PolyMatrix(ctx(), 3, 3)}};
  CHECK_FALSE(t_bijective(zero).bijective);

  BijectivityReport id = t_bijective(row("Ex4.10").embedding);
  CHECK(id.bijective);
  CHECK(id.determinant == P("1"));

  // parameter-dependent t: bijectivity is reported per sampled value
  LieAlgebra rl = algebra("r3_lambda");
  Embedding scaled{rl, r3, M({{"lambda", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}), zero.d};
  BijectivityReport s = t_bijective(scaled);
  CHECK(s.symbolic);
  CHECK_FALSE(s.bijective);
  CHECK(s.determinant == P("lambda"));
  CHECK(t_bijective(scaled, {{"lambda", Rational(2)}}).bijective);
  CHECK_FALSE(t_bijective(scaled, {{"lambda", Rational(0)}}).bijective);
  CHECK_THROWS_AS(t_inverse(scaled), PreconditionError);
  CHECK_THROWS_AS(induce_bracket(zero), PreconditionError);
}

TEST_CASE("induced brackets", "[aff][induce]") {
  LieAlgebra gt = induce_bracket(rotation_embedding());
  CHECK(gt.bracket_basis(2, 0) == e(3, 1));
  CHECK(gt.bracket_basis(2, 1) == Rational(-1) * e(3, 0));
  CHECK(is_zero(gt.bracket_basis(0, 1)));

  LieAlgebra r3 = algebra("R3");
  PolyMatrix zero(ctx(), 3, 3);
  Embedding trivial{r3, r3, PolyMatrix::identity(ctx(), 3), {zero, zero, zero}};
  CHECK(induce_bracket(trivial).is_abelian());
}

TEST_CASE("induced bracket is g transported by t", "[aff][induce][property]") {
  for (const char* id : {"T2.d4", "T2.h4", "T1.r3", "T2.r'_{4,gamma,0}", "Ex5.2"}) {
    INFO(id);
    const CatalogRow& r = row(id);
    Embedding emb = r.embedding.instantiate(r.default_params);
    LieAlgebra gt = induce_bracket(emb);
    std::size_t m = emb.source.dim();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        CHECK(gt.bracket(emb.t.column(i), emb.t.column(j)) == emb.t * emb.source.bracket_basis(i, j));
  }
}

TEST_CASE("composition with psi lands in aff(V)", "[aff][psi]") {
  Embedding rot = rotation_embedding();
  Embedding psi = compose_with_psi(rot);
  CHECK(psi.target.is_abelian());
  CHECK(check_morphism(psi).ok);
  CHECK(psi.d[0] == rot.d[0] + Rational(1, 2) * algebra("h3").ad_matrix(rot.t.column(0)));
}
