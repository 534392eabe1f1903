#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "itg/catalog.hpp"
#include "itg/tutte.hpp"

using namespace itg;

namespace {

Index paren_index(const Presentation& p, int a, int b, int c, int d) {
  for (Index i = 0; i < p.num_generators; ++i) {
    const GeneratorSymbol& s = p.labels[static_cast<std::size_t>(i)];
    if (s.kind == GeneratorSymbol::Kind::quad_paren && s.a == a && s.b == b && s.c == c &&
        s.d == d)
      return i;
  }
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("canonical circuit order sorts by size then lex") {
  CircuitOrder order = CircuitOrder::canonical(catalog_get("F7"));
  REQUIRE(order.count() == 14);
  for (int i = 0; i + 1 < order.count(); ++i) {
    const ElementSet a = order.circuit(i), b = order.circuit(i + 1);
    CHECK((a.size() < b.size() || (a.size() == b.size() && ElementSet::lex_less(a, b))));
  }
  CHECK(order.circuit(0).size() == 3);
  CHECK(order.circuit(13).size() == 4);
}

TEST_CASE("line quadruples") {
  CHECK(line_quadruples(uniform_matroid(2, 4)).size() == 1);
  CHECK(line_quadruples(uniform_matroid(3, 6)).size() == 30);
  CHECK(line_quadruples(catalog_get("M(K4)")).empty());
}

TEST_CASE("generator counts against the published table") {
  CHECK(g_count(uniform_matroid(2, 4)) == 4);
  CHECK(g_count(uniform_matroid(3, 6)) == 91);
  CHECK(g_count(catalog_get("M(K4)")) == 1);
  CHECK(G_count(uniform_matroid(2, 4)) == 85);
  CHECK(G_count(uniform_matroid(3, 5)) == 261);
  CHECK(G_count(catalog_get("M(K4)")) == 109);
}

TEST_CASE("q2 symbols come in pairings per quadruple") {
  CircuitOrder order = CircuitOrder::canonical(uniform_matroid(2, 4));
  auto symbols = q2_symbols(order);
  REQUIRE(symbols.size() == 3);
  CHECK(symbols[0] == quad_paren_symbol(0, 1, 2, 3));
  CHECK(symbols[1] == quad_paren_symbol(0, 2, 1, 3));
  CHECK(symbols[2] == quad_paren_symbol(0, 3, 1, 2));
}

TEST_CASE("bracket normalization implements the nine cases") {
  CircuitOrder order = CircuitOrder::canonical(uniform_matroid(2, 4));
  SUBCASE("identity rows") {
    CHECK(bracket_normalize(order, 0, 0, 2, 3).is_identity);
    CHECK(bracket_normalize(order, 0, 1, 2, 2).is_identity);
  }
  SUBCASE("signed rearrangements") {
    CHECK(bracket_normalize(order, 0, 1, 2, 3) ==
          SignedSymbol::of(+1, quad_paren_symbol(0, 1, 2, 3)));
    CHECK(bracket_normalize(order, 2, 3, 0, 1) ==
          SignedSymbol::of(+1, quad_paren_symbol(0, 1, 2, 3)));
    CHECK(bracket_normalize(order, 0, 1, 3, 2) ==
          SignedSymbol::of(-1, quad_paren_symbol(0, 1, 2, 3)));
    CHECK(bracket_normalize(order, 3, 2, 0, 1) ==
          SignedSymbol::of(-1, quad_paren_symbol(0, 1, 2, 3)));
    CHECK(bracket_normalize(order, 1, 0, 2, 3) ==
          SignedSymbol::of(-1, quad_paren_symbol(0, 1, 2, 3)));
    CHECK(bracket_normalize(order, 2, 3, 1, 0) ==
          SignedSymbol::of(-1, quad_paren_symbol(0, 1, 2, 3)));
    CHECK(bracket_normalize(order, 1, 0, 3, 2) ==
          SignedSymbol::of(+1, quad_paren_symbol(0, 1, 2, 3)));
    CHECK(bracket_normalize(order, 3, 2, 1, 0) ==
          SignedSymbol::of(+1, quad_paren_symbol(0, 1, 2, 3)));
  }
  SUBCASE("overlapping pairs are rejected") {
    CHECK_THROWS_AS(bracket_normalize(order, 0, 1, 1, 2), InvalidConfiguration);
  }
  SUBCASE("a union of higher dimension is rejected") {
    CircuitOrder u26 = CircuitOrder::canonical(uniform_matroid(2, 6));
    // Four triples spanning all six points: dim 3.
    int a = -1, b = -1, c = -1, d = -1;
    for (int i = 0; i < u26.count(); ++i) {
      if (u26.circuit(i) == ElementSet::of({0, 1, 2})) a = i;
      if (u26.circuit(i) == ElementSet::of({0, 1, 3})) b = i;
      if (u26.circuit(i) == ElementSet::of({2, 4, 5})) c = i;
      if (u26.circuit(i) == ElementSet::of({3, 4, 5})) d = i;
    }
    REQUIRE(a >= 0);
    CHECK_THROWS_AS(bracket_normalize(u26, a, b, c, d), InvalidConfiguration);
  }
}

TEST_CASE("triangle families") {
  CHECK(triangle_families(uniform_matroid(2, 4)).empty());
  CHECK(triangle_families(uniform_matroid(2, 3)).empty());

  Matroid mk4 = catalog_get("M(K4)");
  CircuitOrder order = CircuitOrder::canonical(mk4);
  auto families = triangle_families(order);
  REQUIRE_FALSE(families.empty());
  for (const TriangleFamily& f : families) {
    // One transversal circuit per line: the two triples coincide.
    CHECK(f.idx[3] == f.idx[6]);
    CHECK(f.idx[4] == f.idx[7]);
    CHECK(f.idx[5] == f.idx[8]);
    // Structural invariants.
    for (int s = 0; s < 3; ++s) {
      CHECK(order.dim_of(f.line_sets[static_cast<std::size_t>(s)]) == 1);
      CHECK(order.circuit(f.idx[static_cast<std::size_t>(s + 3)])
                .subset_of(f.line_sets[static_cast<std::size_t>(s)]));
      CHECK(order.circuit(f.idx[static_cast<std::size_t>(s + 6)])
                .subset_of(f.line_sets[static_cast<std::size_t>(s)]));
    }
    CHECK(order.dim_of(f.plane_set) == 2);
  }
  CHECK(s5_families(mk4, order).empty());

  // Pencil families of the 5-point line: one per point pair.
  Matroid u25 = catalog_get("U_2(5)");
  CHECK(s5_families(u25, CircuitOrder::canonical(u25)).size() == 10);
}

TEST_CASE("extended presentation of U_2(4)") {
  Matroid u24 = uniform_matroid(2, 4);
  auto [p, lambda] = build_extended(u24);
  CHECK(p.num_generators == 25);
  CHECK(p.relations.size() == 13);  // 2 eps plus one per circuit/cocircuit pair
  CHECK(lambda.rows() == 4 + 4 + 4);
  CHECK(lambda.cols() == 25);
  for (const SparseVec& r : p.relations) {
    IntVector image = IntVector::Zero(lambda.rows());
    for (const auto& [i, c] : r) image += lambda.col(i) * c;
    for (Index i = 0; i < image.size(); ++i) CHECK(image(i) == 0);
  }
  GroupInvariants g = invariants(kernel_presentation(p, lambda));
  CHECK(g.free_rank == 2);
  CHECK(g.torsion == std::vector<Int>{2});
}

TEST_CASE("square-bracket presentation") {
  SUBCASE("U_2(4)") {
    Presentation p = build_tm2(uniform_matroid(2, 4));
    CHECK(p.num_generators == 85);
    GroupInvariants g = invariants(p);
    CHECK(g.free_rank == 2);
    CHECK(g.torsion == std::vector<Int>{2});
  }
  SUBCASE("F7 collapses to the trivial group") {
    Presentation p = build_tm2(catalog_get("F7"));
    CHECK(p.num_generators == 379);
    CHECK(invariants(p).is_trivial());
  }
  SUBCASE("M(K4) keeps only the sign") {
    Presentation p = build_tm2(catalog_get("M(K4)"));
    CHECK(p.num_generators == 109);
    GroupInvariants g = invariants(p);
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<Int>{2});
  }
}

TEST_CASE("small presentation") {
  SUBCASE("U_2(4): four generators and the hand relations") {
    Matroid u24 = uniform_matroid(2, 4);
    Presentation p = build_tmi0(u24, CircuitOrder::canonical(u24));
    REQUIRE(p.num_generators == 4);
    REQUIRE(p.relations.size() == 2);
    CHECK(p.relations[0] == SparseVec{{0, 2}});
    // (01|23) + (03|12) - (02|13) - eta = 0
    CHECK(p.relations[1] == SparseVec{{0, -1}, {1, 1}, {2, -1}, {3, 1}});
    GroupInvariants g = invariants(p);
    CHECK(g.free_rank == 2);
    CHECK(g.torsion == std::vector<Int>{2});
  }
  SUBCASE("F7: eta killed by the minor relation") {
    Matroid f7 = catalog_get("F7");
    Presentation p = build_tmi0(f7, CircuitOrder::canonical(f7));
    CHECK(p.num_generators == 1);
    REQUIRE(p.relations.size() == 2);
    CHECK(p.relations[0] == SparseVec{{0, 2}});
    CHECK(p.relations[1] == SparseVec{{0, 1}});
    CHECK(invariants(p).is_trivial());
  }
  SUBCASE("M(K4): only eta and its square") {
    Matroid mk4 = catalog_get("M(K4)");
    Presentation p = build_tmi0(mk4, CircuitOrder::canonical(mk4));
    CHECK(p.num_generators == 1);
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0] == SparseVec{{0, 2}});
    GroupInvariants g = invariants(p);
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<Int>{2});
  }
}

TEST_CASE("inner invariants agree across methods") {
  for (const auto& name : {"U_2(4)", "U_2(5)", "U_3(5)", "M(K4)", "W3", "R6", "F7*"}) {
    Matroid m = catalog_get(name);
    const GroupInvariants kernel = inner_invariants(m, Method::kernel);
    CHECK(kernel == inner_invariants(m, Method::tm2));
    CHECK(kernel == inner_invariants(m, Method::tmi0));
  }
}

TEST_CASE("counts and invariants are independent of the circuit order") {
  std::mt19937_64 rng(13);
  for (const auto& name : {"U_2(4)", "U_3(5)", "W3", "F7-"}) {
    Matroid m = catalog_get(name);
    CircuitOrder canonical = CircuitOrder::canonical(m);
    std::vector<int> perm(static_cast<std::size_t>(canonical.count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CircuitOrder shuffled = CircuitOrder::permuted(m, perm);

    CHECK(q2_symbols(shuffled).size() == q2_symbols(canonical).size());
    CHECK(g2_symbols(shuffled).size() == g2_symbols(canonical).size());
    CHECK(invariants(build_tmi0(m, shuffled)) == invariants(build_tmi0(m, canonical)));
    CHECK(invariants(build_tm2(m, shuffled)) == invariants(build_tm2(m, canonical)));
  }
}

TEST_CASE("phi and psi map the sign generators onto each other") {
  Matroid u24 = uniform_matroid(2, 4);
  CircuitOrder order = CircuitOrder::canonical(u24);
  IsoMaps maps = phi_psi_maps(u24, order);
  // phi(xi) = eta and psi(eta) = xi: both are generator 0.
  CHECK(maps.phi(0, 0) == 1);
  CHECK(maps.psi(0, 0) == 1);
  for (Index i = 1; i < maps.phi.rows(); ++i) CHECK(maps.phi(i, 0) == 0);
  for (Index i = 1; i < maps.psi.rows(); ++i) CHECK(maps.psi(i, 0) == 0);
  // Every column of phi has at most one nonzero entry, of magnitude 1.
  for (Index j = 0; j < maps.phi.cols(); ++j) {
    int nonzero = 0;
    for (Index i = 0; i < maps.phi.rows(); ++i)
      if (maps.phi(i, j) != 0) {
        ++nonzero;
        CHECK(abs(maps.phi(i, j)) == 1);
      }
    CHECK(nonzero <= 1);
  }
}

TEST_CASE("isomorphism verification passes on representative matroids") {
  for (const auto& name : {"U_2(4)", "M(K4)", "F7", "U_3(5)"}) {
    IsomorphismStats stats = verify_isomorphism(catalog_get(name));
    CHECK(stats.tm2_relations_checked > 0);
    CHECK(stats.tmi0_relations_checked > 0);
    CHECK(stats.generators_roundtripped > 0);
  }
}

TEST_CASE("Tutte subgroup decomposition on U_2(4)") {
  Matroid u24 = uniform_matroid(2, 4);
  auto [ext, lambda] = build_extended(u24);
  GroupInvariants subgroup = subgroup_invariants(ext, tutte_subgroup_generators(ext));
  CHECK(subgroup.free_rank == 5);  // inner rank 2 plus |E| - c = 3
  CHECK(subgroup.torsion == std::vector<Int>{2});
}

// The sixth five-subset equation must end in (C1 C5|C2 C4)^-1. Ending
// it in (C1 C5|C2 C3)^-1 instead (the fifth equation's tail, an easy
// transcription slip) collapses a free factor of the group, so that
// variant cannot present the inner Tutte group.
TEST_CASE("a transposed tail in the sixth five-subset equation breaks the group") {
  Matroid u35 = uniform_matroid(3, 5);
  CircuitOrder order = CircuitOrder::canonical(u35);
  Presentation p = build_tmi0(u35, order);
  const GroupInvariants good = invariants(p);
  CHECK(good.free_rank == 5);
  CHECK(good.torsion == std::vector<Int>{2});
  CHECK(good == inner_invariants(u35, Method::kernel));

  // The broken variant on the unique dim-1 five-subset {0,1,2,3,4}:
  // (C0 C2|C1 C3)(C1 C3|C2 C4)(C0 C4|C1 C2)^-1 = 1.
  Presentation printed = p;
  printed.relations.push_back({{paren_index(p, 0, 2, 1, 3), Int(1)},
                               {paren_index(p, 1, 3, 2, 4), Int(1)},
                               {paren_index(p, 0, 4, 1, 2), Int(-1)}});
  std::sort(printed.relations.back().begin(), printed.relations.back().end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const GroupInvariants broken = invariants(printed);
  CHECK(broken.free_rank == 4);
  CHECK_FALSE(broken == inner_invariants(u35, Method::kernel));
}

TEST_CASE("eta is 2-torsion and dies exactly with Fano-type minors") {
  for (const auto& name : catalog_names()) {
    Matroid m = catalog_get(name);
    Presentation p = build_tmi0(m, CircuitOrder::canonical(m));
    RelationLattice lattice(p);
    IntVector eta = IntVector::Zero(p.num_generators);
    eta(0) = 1;
    IntVector twice = lattice.reduce(IntVector(2 * eta));
    for (Index i = 0; i < twice.size(); ++i) CHECK(twice(i) == 0);
    IntVector once = lattice.reduce(eta);
    bool eta_zero = true;
    for (Index i = 0; i < once.size(); ++i)
      if (once(i) != 0) eta_zero = false;
    CHECK(eta_zero == (has_fano_minor(m) || has_dual_fano_minor(m)));
  }
}

TEST_CASE("square-bracket tuples of U_3(5) split into the four repeat forms") {
  // One 5-circuit line: 5*4 = 20 tuples of form (AA|BB), 5*4*3 = 60 of
  // (AA|BC) and of (AB|CC), 5*4*3*2 = 120 of (AB|CD), 260 in all.
  CircuitOrder order = CircuitOrder::canonical(uniform_matroid(3, 5));
  long aabb = 0, aabc = 0, abcc = 0, abcd = 0;
  for (const GeneratorSymbol& s : g2_symbols(order)) {
    const bool first_equal = s.a == s.b;
    const bool second_equal = s.c == s.d;
    if (first_equal && second_equal) ++aabb;
    else if (first_equal) ++aabc;
    else if (second_equal) ++abcc;
    else ++abcd;
  }
  CHECK(aabb == 20);
  CHECK(aabc == 60);
  CHECK(abcc == 60);
  CHECK(abcd == 120);
}

TEST_CASE("presentations refuse circuit families past the desk scale") {
  // U_4(10) has 252 circuits; the quadruple enumeration would explode.
  Matroid big = uniform_matroid(4, 10);
  CHECK_THROWS_AS(g_count(big), InvalidConfiguration);
  CHECK_THROWS_AS(G_count(big), InvalidConfiguration);
}
