#include <doctest.h>

#include <numeric>
#include <random>

#include "itg/catalog.hpp"
#include "itg/verify.hpp"

using namespace itg;

TEST_CASE("full verification on small matroids") {
  SUBCASE("U_2(4)") {
    VerifyReport report = run_full_verify(catalog_get("U_2(4)"));
    CHECK(report.passed());
    CHECK(report.invariants.free_rank == 2);
    CHECK(report.invariants.torsion == std::vector<Int>{2});
    CHECK(report.bracket_identities.configurations > 0);
    CHECK_FALSE(report.bracket_identities.sampled);
  }
  SUBCASE("F7 exercises the minor branch") {
    VerifyReport report = run_full_verify(catalog_get("F7"));
    CHECK(report.passed());
    CHECK(report.invariants.is_trivial());
  }
  SUBCASE("U_2(5) exercises the triangle families") {
    VerifyReport report = run_full_verify(catalog_get("U_2(5)"));
    CHECK(report.passed());
    CHECK(report.triangle_invariance.configurations == 10 * 12);
  }
}

TEST_CASE("seed does not matter in the exhaustive regime") {
  VerifyOptions a, b;
  a.seed = 7;
  b.seed = 9;
  VerifyReport ra = run_full_verify(catalog_get("U_2(4)"), a);
  VerifyReport rb = run_full_verify(catalog_get("U_2(4)"), b);
  CHECK(ra.passed() == rb.passed());
  CHECK(ra.bracket_identities.configurations == rb.bracket_identities.configurations);
  CHECK(ra.quadruple_invariance.configurations == rb.quadruple_invariance.configurations);
  CHECK(ra.triangle_invariance.configurations == rb.triangle_invariance.configurations);
  CHECK_FALSE(ra.bracket_identities.sampled);
  CHECK_FALSE(ra.quadruple_invariance.sampled);
}

TEST_CASE("sampling kicks in beyond the exhaustive limit") {
  VerifyOptions opts;
  opts.exhaustive_limit = 24;  // force sampling on any matroid with quadruples
  CheckResult r = check_quadruple_invariance(catalog_get("U_3(6)"), opts);
  CHECK(r.passed);
  CHECK(r.sampled);
  CHECK(r.configurations == 24);  // one quadruple, all orderings
}

TEST_CASE("decomposition check on three representatives") {
  for (const auto& name : {"U_2(4)", "U_3(5)", "M(K4)"}) {
    CheckResult r = check_decomposition(catalog_get(name));
    CHECK(r.passed);
  }
}

namespace {

// Cycle matroid of a random multigraph (loops and parallel edges
// allowed): independent = acyclic, bases = maximal forests.
itg::Matroid random_graphic_matroid(std::mt19937_64& rng, int vertices, int edges) {
  std::uniform_int_distribution<int> vertex(0, vertices - 1);
  std::vector<std::pair<int, int>> ends;
  for (int e = 0; e < edges; ++e) ends.emplace_back(vertex(rng), vertex(rng));

  auto forest_rank = [&](std::uint32_t mask) {
    std::vector<int> parent(static_cast<std::size_t>(vertices));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    int rank = 0;
    bool acyclic = true;
    for (int e = 0; e < edges; ++e) {
      if (!((mask >> e) & 1u)) continue;
      int ru = find(ends[static_cast<std::size_t>(e)].first);
      int rv = find(ends[static_cast<std::size_t>(e)].second);
      if (ru == rv) {
        acyclic = false;
        break;
      }
      parent[static_cast<std::size_t>(ru)] = rv;
      ++rank;
    }
    return acyclic ? rank : -1;
  };

  int best = 0;
  const std::uint32_t full = itg::ElementSet::full(edges).mask();
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    best = std::max(best, forest_rank(mask));
    if (mask == full) break;
  }
  std::vector<itg::ElementSet> bases;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (forest_rank(mask) == best) bases.push_back(itg::ElementSet(mask));
    if (mask == full) break;
  }
  return itg::Matroid::from_bases(edges, bases);
}

}  // namespace

TEST_CASE("random graphic matroids pass the isomorphism verification") {
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<int> nv(3, 5), ne(4, 7);
  for (int trial = 0; trial < 8; ++trial) {
    Matroid m = random_graphic_matroid(rng, nv(rng), ne(rng));
    CAPTURE(trial);
    CHECK_NOTHROW(verify_isomorphism(m));
    CHECK(check_decomposition(m).passed);
  }
}
