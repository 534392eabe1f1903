#include <doctest.h>

#include <random>

#include "itg/lattice.hpp"
#include "test_helpers.hpp"

using namespace itg;
using itg::testing::determinant;
using itg::testing::determinant_divisor;
using itg::testing::naive_snf;

namespace {

IntMatrix make(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// 2x2 lattice membership by Cramer's rule; independent of HermiteBasis.
bool in_lattice_2x2(const IntMatrix& basis, const IntRowVector& target) {
  REQUIRE(basis.rows() == 2);
  REQUIRE(basis.cols() == 2);
  const Int det = basis(0, 0) * basis(1, 1) - basis(0, 1) * basis(1, 0);
  REQUIRE(det != 0);
  const Int x_num = target(0) * basis(1, 1) - target(1) * basis(1, 0);
  const Int y_num = basis(0, 0) * target(1) - basis(0, 1) * target(0);
  return x_num % det == 0 && y_num % det == 0;
}

// The small presentation of U_2(4): generators (eta, a, b, c) with
// relations 2 eta = 0 and a - b + c - eta = 0; by hand this reduces to
// Z^2 x Z/2.
Presentation u24_small() {
  Presentation p;
  p.num_generators = 4;
  p.relations.push_back({{0, 2}});
  p.relations.push_back({{0, -1}, {1, 1}, {2, -1}, {3, 1}});
  return p;
}

}  // namespace

TEST_CASE("hnf") {
  SUBCASE("identity is fixed") {
    IntMatrix id = IntMatrix::Identity(3, 3);
    IntMatrix h = hnf(id);
    REQUIRE(h.rows() == 3);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j) CHECK(h(i, j) == (i == j ? 1 : 0));
  }
  SUBCASE("zero rows are dropped") {
    IntMatrix h = hnf(make({{2, 4}, {0, 0}}));
    REQUIRE(h.rows() == 1);
    CHECK(h(0, 0) == 2);
    CHECK(h(0, 1) == 4);
  }
  SUBCASE("lattice is preserved") {
    const IntMatrix input = make({{4, 6}, {6, 4}});
    IntMatrix h = hnf(input);
    REQUIRE(h.rows() == 2);
    // Echelon with nonnegative pivots, entries above reduced.
    CHECK(h(0, 0) > 0);
    CHECK(h(1, 0) == 0);
    CHECK(h(1, 1) > 0);
    CHECK(h(0, 1) >= 0);
    CHECK(h(0, 1) < h(1, 1));
    // Membership both ways (Cramer oracle).
    for (Index i = 0; i < 2; ++i) {
      CHECK(in_lattice_2x2(h, IntRowVector(input.row(i))));
      CHECK(in_lattice_2x2(input, IntRowVector(h.row(i))));
    }
    // Same covolume.
    CHECK(abs(determinant(h)) == abs(determinant(input)));
  }
}

TEST_CASE("snf") {
  SUBCASE("already diagonal") {
    auto d = snf(make({{1, 0, 0}, {0, 2, 0}, {0, 0, 0}}));
    CHECK(d == std::vector<Int>{1, 2, 0});
  }
  SUBCASE("2x2 example") {
    auto d = snf(make({{4, 6}, {6, 4}}));
    CHECK(d == std::vector<Int>{2, 10});
  }
  SUBCASE("empty matrix") {
    CHECK(snf(IntMatrix(0, 0)).empty());
    CHECK(snf(IntMatrix(0, 3)).empty());
  }
  SUBCASE("random matrices: divisibility, determinant divisors, naive reducer") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
      IntMatrix a(4, 4);
      for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j) a(i, j) = entry(rng);
      const auto d = snf(a);
      // Divisibility chain.
      for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i + 1] == 0) break;
        REQUIRE(d[i] != 0);
        CHECK(d[i + 1] % d[i] == 0);
      }
      // Product of the first k entries equals the k-th determinant
      // divisor.
      Int product = 1;
      for (int k = 1; k <= 4; ++k) {
        product *= d[static_cast<std::size_t>(k - 1)];
        CHECK(abs(product) == determinant_divisor(a, k));
      }
      // Naive elementary-operations reducer agrees.
      CHECK(d == naive_snf(a));
    }
  }
}

TEST_CASE("invariants") {
  SUBCASE("free group") {
    Presentation p;
    p.num_generators = 3;
    GroupInvariants g = invariants(p);
    CHECK(g.free_rank == 3);
    CHECK(g.torsion.empty());
  }
  SUBCASE("the U_2(4) small presentation reduces to Z^2 x Z/2") {
    GroupInvariants g = invariants(u24_small());
    CHECK(g.free_rank == 2);
    CHECK(g.torsion == std::vector<Int>{2});
    CHECK(to_string(g) == "Z^2 x Z/2");
  }
  SUBCASE("one generator killed") {
    Presentation p;
    p.num_generators = 1;
    p.relations.push_back({{0, 1}});
    CHECK(invariants(p).is_trivial());
    CHECK(to_string(invariants(p)) == "1");
  }
}

TEST_CASE("reduce and elements_equal") {
  Presentation p = u24_small();
  SUBCASE("relation vectors reduce to zero") {
    for (const SparseVec& r : p.relations) {
      IntVector v = to_dense(r, p.num_generators).transpose();
      IntVector red = reduce(p, v);
      for (Index i = 0; i < red.size(); ++i) CHECK(red(i) == 0);
    }
  }
  SUBCASE("2 eta reduces to zero") {
    IntVector v = IntVector::Zero(4);
    v(0) = 2;
    IntVector red = reduce(p, v);
    for (Index i = 0; i < red.size(); ++i) CHECK(red(i) == 0);
  }
  SUBCASE("a + c - b equals eta") {
    IntVector lhs = IntVector::Zero(4);
    lhs(1) = 1;
    lhs(2) = -1;
    lhs(3) = 1;
    IntVector eta = IntVector::Zero(4);
    eta(0) = 1;
    CHECK(elements_equal(p, lhs, eta));
    CHECK_FALSE(elements_equal(p, lhs, IntVector::Zero(4)));
  }
  SUBCASE("reduce is idempotent on random vectors") {
    RelationLattice lattice(p);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
      IntVector v(4);
      for (Index i = 0; i < 4; ++i) v(i) = entry(rng);
      IntVector once = lattice.reduce(v);
      IntVector twice = lattice.reduce(once);
      for (Index i = 0; i < 4; ++i) CHECK(once(i) == twice(i));
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(reduce(p, IntVector::Zero(5)), DimensionMismatch);
  }
}

TEST_CASE("invariants are presentation invariant") {
  const Presentation base = u24_small();
  const GroupInvariants expected = invariants(base);
  std::mt19937_64 rng(99);

  SUBCASE("appending redundant relations") {
    Presentation p = base;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int extra = 0; extra < 5; ++extra) {
      IntVector v = IntVector::Zero(p.num_generators);
      for (const SparseVec& r : base.relations) {
        const Int c(coeff(rng));
        for (const auto& [i, val] : r) v(i) += val * c;
      }
      p.relations.push_back(to_sparse(v.transpose()));
      CHECK(invariants(p) == expected);
    }
  }
  SUBCASE("permuting generators") {
    std::vector<Index> perm = {2, 0, 3, 1};
    Presentation p;
    p.num_generators = 4;
    for (const SparseVec& r : base.relations) {
      SparseVec mapped;
      for (const auto& [i, c] : r) mapped.emplace_back(perm[static_cast<std::size_t>(i)], c);
      std::sort(mapped.begin(), mapped.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      p.relations.push_back(mapped);
    }
    CHECK(invariants(p) == expected);
  }
  SUBCASE("permuting relations") {
    Presentation p = base;
    std::reverse(p.relations.begin(), p.relations.end());
    CHECK(invariants(p) == expected);
  }
}

TEST_CASE("kernel basis and kernel presentation") {
  SUBCASE("kernel of a surjection from Z^2") {
    IntMatrix lambda = make({{1, 0}});
    IntMatrix k = kernel_basis(lambda);
    REQUIRE(k.rows() == 1);
    CHECK(k(0, 0) == 0);
    CHECK(abs(k(0, 1)) == 1);
    Presentation p;
    p.num_generators = 2;
    GroupInvariants g = invariants(kernel_presentation(p, lambda));
    CHECK(g.free_rank == 1);
    CHECK(g.torsion.empty());
  }
  SUBCASE("zero map keeps the group") {
    Presentation p = u24_small();
    IntMatrix lambda = IntMatrix::Zero(2, 4);
    CHECK(invariants(kernel_presentation(p, lambda)) == invariants(p));
  }
  SUBCASE("saturation: torsion is not lost") {
    // lambda = (1 1); kernel is spanned by (1,-1), and the relation
    // 2(g0 - g1) = 0 must survive as Z/2.
    Presentation p;
    p.num_generators = 2;
    p.relations.push_back({{0, 2}, {1, -2}});
    IntMatrix lambda = make({{1, 1}});
    GroupInvariants g = invariants(kernel_presentation(p, lambda));
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<Int>{2});
  }
  SUBCASE("ill-defined maps are rejected") {
    Presentation p;
    p.num_generators = 1;
    p.relations.push_back({{0, 2}});
    IntMatrix lambda = make({{1}});
    CHECK_THROWS_AS(kernel_presentation(p, lambda), IllDefined);
  }
  SUBCASE("dimension mismatch") {
    Presentation p;
    p.num_generators = 3;
    CHECK_THROWS_AS(kernel_presentation(p, make({{1, 0}})), DimensionMismatch);
  }
}

TEST_CASE("subgroup invariants") {
  Presentation p = u24_small();
  SUBCASE("standard basis recovers the whole group") {
    std::vector<IntVector> gens;
    for (Index i = 0; i < 4; ++i) {
      IntVector v = IntVector::Zero(4);
      v(i) = 1;
      gens.push_back(v);
    }
    CHECK(subgroup_invariants(p, gens) == invariants(p));
  }
  SUBCASE("no generators give the trivial group") {
    CHECK(subgroup_invariants(p, {}).is_trivial());
  }
  SUBCASE("the torsion element generates Z/2") {
    IntVector eta = IntVector::Zero(4);
    eta(0) = 1;
    GroupInvariants g = subgroup_invariants(p, {eta});
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<Int>{2});
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(subgroup_invariants(p, {IntVector::Zero(3)}), DimensionMismatch);
  }
}
