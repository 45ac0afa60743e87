// Builds the rotation algebra acting on the Heisenberg algebra, induces the
// post-Lie structure and prints its multiplication operators.

#include <iostream>

#include "plas/plas.hpp"

using namespace plas;

int main() {
  SymbolContext ctx = SymbolContext::standard({}, 3);
  auto e = [&](std::size_t k) { return basis_vector(ctx, 3, k); };

  // h3: [e1,e2] = e3
  LieAlgebra h(StructureConstants{"h3", 3, {}, ctx, {{0, 1, e(2)}}});
  // g: [e1,e2] = e3, [e1,e3] = -e2
  LieAlgebra g(StructureConstants{"rot", 3, {}, ctx, {{0, 1, e(2)}, {0, 2, Rational(-1) * e(1)}}});

  PolyVector translation{parse_poly("x2", ctx), parse_poly("x3", ctx), parse_poly("x1", ctx)};
  PolyMatrix derivation = PolyMatrix::parse(ctx, {{"0", "-x1", "0"}, {"x1", "0", "0"}, {"1/2*x3", "-1/2*x2", "0"}});
  Embedding emb = embedding_from_map(g, h, translation, derivation);

  auto mor = check_morphism(emb);
  std::cout << "g -> aff(h) is a morphism: " << (mor.ok ? "yes" : "no") << "\n";
  std::cout << "det t = " << format_poly(t_bijective(emb).determinant) << "\n";

  PlasStructure p = induce_plas(emb);
  std::cout << "induced bracket: " << format_bracket_list(p.g, "f") << "\n";
  std::cout << "L_x =\n" << format_matrix(left_mult(p, generic_vector(ctx, "x", 3))) << "\n";
  PolyMatrix R = right_mult(p, generic_vector(ctx, "y", 3));
  std::cout << "R_y =\n" << format_matrix(R) << "\n";
  std::cout << "char poly of R_y: " << char_poly(R).to_string() << "\n";

  auto ax = verify_plas(p);
  std::cout << "PLAS axioms hold: " << (ax.ok() ? "yes" : "no") << "\n";

  auto comp = completeness_report(p);
  std::cout << "R_y nilpotent: " << (comp.right_nilpotent ? "yes" : "no") << "\n";
  std::cout << "R_y - 1/2 ad_y nilpotent (complete): " << (comp.shifted_nilpotent ? "yes" : "no") << "\n";
  return 0;
}
