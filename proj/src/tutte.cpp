#include "itg/tutte.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace itg {

namespace {

// The quadruple and five-subset enumerations scale as k^4 and C(k,5) in
// the circuit count k; refuse inputs past the supported desk scale
// instead of appearing to hang.
constexpr int kMaxCircuits = 64;

void check_desk_scale(int k) {
  if (k > kMaxCircuits)
    throw InvalidConfiguration("matroid has " + std::to_string(k) +
                               " circuits; presentations are supported up to " +
                               std::to_string(kMaxCircuits));
}

bool size_lex_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return ElementSet::lex_less(a, b);
}

}  // namespace

CircuitOrder::CircuitOrder(Matroid m, std::vector<ElementSet> circuits)
    : matroid_(std::move(m)), circuits_(std::move(circuits)) {}

CircuitOrder CircuitOrder::canonical(const Matroid& m) {
  std::vector<ElementSet> circuits = m.circuits();
  std::sort(circuits.begin(), circuits.end(), size_lex_less);
  return CircuitOrder(m, std::move(circuits));
}

CircuitOrder CircuitOrder::permuted(const Matroid& m, const std::vector<int>& perm) {
  CircuitOrder base = canonical(m);
  if (perm.size() != base.circuits_.size())
    throw InvalidConfiguration("permutation size does not match circuit count");
  std::vector<ElementSet> circuits(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int p = perm[i];
    if (p < 0 || p >= static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(p)])
      throw InvalidConfiguration("not a permutation of circuit indices");
    seen[static_cast<std::size_t>(p)] = true;
    circuits[i] = base.circuits_[static_cast<std::size_t>(p)];
  }
  return CircuitOrder(m, std::move(circuits));
}

namespace {

// Shared enumeration state for one (matroid, circuit order) pair.
struct Configurations {
  const CircuitOrder& order;
  int k;
  std::vector<ElementSet> c;
  std::vector<std::array<int, 4>> g2_tuples;  // lex order
  std::unordered_set<std::uint64_t> g2_set;

  explicit Configurations(const CircuitOrder& ord)
      : order(ord), k(ord.count()), c(ord.circuits()) {
    check_desk_scale(k);
    // Valid square-bracket tuples: every cross pair union equals the
    // full union L, and dim(L) = 1. A repeated circuit across the two
    // pairs would force dim(L) = 0, so the pairs are disjoint.
    for (int i1 = 0; i1 < k; ++i1)
      for (int i2 = 0; i2 < k; ++i2) {
        const ElementSet u12 = c[i1] | c[i2];
        for (int i3 = 0; i3 < k; ++i3) {
          if (i3 == i1 || i3 == i2) continue;
          const ElementSet u123 = u12 | c[i3];
          for (int i4 = 0; i4 < k; ++i4) {
            if (i4 == i1 || i4 == i2) continue;
            const ElementSet l = u123 | c[i4];
            if ((c[i1] | c[i3]) != l || (c[i1] | c[i4]) != l || (c[i2] | c[i3]) != l ||
                (c[i2] | c[i4]) != l)
              continue;
            if (order.dim_of(l) != 1) continue;
            g2_tuples.push_back({i1, i2, i3, i4});
            g2_set.insert(pack_quad(i1, i2, i3, i4));
          }
        }
      }
  }

  bool has(int a, int b, int cc, int d) const { return g2_set.count(pack_quad(a, b, cc, d)) != 0; }
};

}  // namespace

std::vector<std::array<int, 4>> line_quadruples(const CircuitOrder& order) {
  const int k = order.count();
  check_desk_scale(k);
  const auto& c = order.circuits();
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const ElementSet uab = c[a] | c[b];
      for (int cc = b + 1; cc < k; ++cc) {
        const ElementSet uabc = uab | c[cc];
        for (int d = cc + 1; d < k; ++d)
          if (order.dim_of(uabc | c[d]) == 1) out.push_back({a, b, cc, d});
      }
    }
  return out;
}

std::vector<std::array<int, 4>> line_quadruples(const Matroid& m) {
  return line_quadruples(CircuitOrder::canonical(m));
}

std::vector<GeneratorSymbol> q2_symbols(const CircuitOrder& order) {
  std::vector<GeneratorSymbol> out;
  for (const auto& q : line_quadruples(order)) {
    out.push_back(quad_paren_symbol(q[0], q[1], q[2], q[3]));
    out.push_back(quad_paren_symbol(q[0], q[2], q[1], q[3]));
    out.push_back(quad_paren_symbol(q[0], q[3], q[1], q[2]));
  }
  return out;
}

long g_count(const Matroid& m) {
  return 3 * static_cast<long>(line_quadruples(m).size()) + 1;
}

std::vector<GeneratorSymbol> g2_symbols(const CircuitOrder& order) {
  Configurations conf(order);
  std::vector<GeneratorSymbol> out;
  out.reserve(conf.g2_tuples.size());
  for (const auto& t : conf.g2_tuples) out.push_back(quad_square_symbol(t[0], t[1], t[2], t[3]));
  return out;
}

long G_count(const Matroid& m) {
  Configurations conf(CircuitOrder::canonical(m));
  return static_cast<long>(conf.g2_tuples.size()) + 1;
}

SignedSymbol bracket_normalize(const CircuitOrder& order, int d1, int d2, int d3, int d4) {
  if (d1 == d2 || d3 == d4) return SignedSymbol::identity();
  if (d1 == d3 || d1 == d4 || d2 == d3 || d2 == d4)
    throw InvalidConfiguration("bracket pairs are not disjoint");
  const auto& c = order.circuits();
  if (order.dim_of(c[d1] | c[d2] | c[d3] | c[d4]) != 1)
    throw InvalidConfiguration("bracket union does not have dim 1");
  if (d1 < d2) {
    if (d3 < d4) {
      if (d1 < d3) return SignedSymbol::of(+1, quad_paren_symbol(d1, d2, d3, d4));
      return SignedSymbol::of(+1, quad_paren_symbol(d3, d4, d1, d2));
    }
    if (d1 < d4) return SignedSymbol::of(-1, quad_paren_symbol(d1, d2, d4, d3));
    return SignedSymbol::of(-1, quad_paren_symbol(d4, d3, d1, d2));
  }
  if (d3 < d4) {
    if (d2 < d3) return SignedSymbol::of(-1, quad_paren_symbol(d2, d1, d3, d4));
    return SignedSymbol::of(-1, quad_paren_symbol(d3, d4, d2, d1));
  }
  if (d2 < d4) return SignedSymbol::of(+1, quad_paren_symbol(d2, d1, d4, d3));
  return SignedSymbol::of(+1, quad_paren_symbol(d4, d3, d2, d1));
}

std::vector<TriangleFamily> triangle_families(const CircuitOrder& order) {
  const int k = order.count();
  check_desk_scale(k);
  const auto& c = order.circuits();
  std::vector<TriangleFamily> out;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (b == a) continue;
      const ElementSet l3 = c[a] | c[b];  // line opposite position 3
      if (order.dim_of(l3) != 1) continue;
      for (int d = 0; d < k; ++d) {
        if (d == a || d == b) continue;
        const ElementSet l1 = c[b] | c[d];
        const ElementSet l2 = c[a] | c[d];
        if (order.dim_of(l1) != 1 || order.dim_of(l2) != 1) continue;
        const ElementSet plane = l3 | c[d];
        if (order.dim_of(plane) != 2) continue;

        // Transversal candidates: circuits inside each line, triangle
        // circuits excluded.
        std::array<std::vector<int>, 3> cand;
        const std::array<ElementSet, 3> lines = {l1, l2, l3};
        for (int s = 0; s < 3; ++s)
          for (int t = 0; t < k; ++t) {
            if (t == a || t == b || t == d) continue;
            if (c[t].subset_of(lines[static_cast<std::size_t>(s)]))
              cand[static_cast<std::size_t>(s)].push_back(t);
          }
        std::vector<std::array<int, 3>> transversals;
        for (int t1 : cand[0])
          for (int t2 : cand[1])
            for (int t3 : cand[2])
              if (order.dim_of(c[t1] | c[t2] | c[t3]) == 1) transversals.push_back({t1, t2, t3});
        for (const auto& first : transversals)
          for (const auto& second : transversals)
            out.push_back(TriangleFamily{
                {a, b, d, first[0], first[1], first[2], second[0], second[1], second[2]},
                lines,
                plane});
      }
    }
  return out;
}

std::vector<TriangleFamily> triangle_families(const Matroid& m) {
  return triangle_families(CircuitOrder::canonical(m));
}

std::vector<TriangleFamily> s5_families(const Matroid&, const CircuitOrder& order) {
  std::vector<TriangleFamily> out;
  for (const TriangleFamily& f : triangle_families(order)) {
    if (!(f.idx[0] < f.idx[1] && f.idx[1] < f.idx[2])) continue;
    if (f.idx[3] >= f.idx[6] && f.idx[4] >= f.idx[7] && f.idx[5] >= f.idx[8]) continue;
    out.push_back(f);
  }
  return out;
}

namespace {

// Accumulates coefficients of one relation; repeated symbols add up.
class RelationBuilder {
 public:
  RelationBuilder& add(Index i, Int coeff) {
    terms_[i] += std::move(coeff);
    return *this;
  }
  SparseVec done() {
    SparseVec out;
    for (auto& [i, coeff] : terms_)
      if (coeff != 0) out.emplace_back(i, coeff);
    return out;
  }

 private:
  std::map<Index, Int> terms_;
};

struct Tm2Symbols {
  std::vector<std::array<int, 4>> tuples;            // generator i+1 = tuples[i]
  std::unordered_map<std::uint64_t, Index> index;    // packed tuple -> generator

  explicit Tm2Symbols(const Configurations& conf) : tuples(conf.g2_tuples) {
    for (std::size_t i = 0; i < tuples.size(); ++i)
      index.emplace(pack_quad(tuples[i][0], tuples[i][1], tuples[i][2], tuples[i][3]),
                    static_cast<Index>(i + 1));
  }

  Index at(int a, int b, int c, int d) const {
    auto it = index.find(pack_quad(a, b, c, d));
    if (it == index.end())
      throw InvalidConfiguration("square-bracket symbol lookup failed: " +
                                 to_string(quad_square_symbol(a, b, c, d)));
    return it->second;
  }
  bool has(int a, int b, int c, int d) const { return index.count(pack_quad(a, b, c, d)) != 0; }
};

struct Tmi0Symbols {
  std::vector<std::array<int, 4>> quadruples;
  std::vector<std::array<int, 4>> tuples;            // generator i+1 = tuples[i]
  std::unordered_map<std::uint64_t, Index> index;

  explicit Tmi0Symbols(const CircuitOrder& order) : quadruples(line_quadruples(order)) {
    for (const auto& q : quadruples) {
      push(q[0], q[1], q[2], q[3]);
      push(q[0], q[2], q[1], q[3]);
      push(q[0], q[3], q[1], q[2]);
    }
  }

  void push(int a, int b, int c, int d) {
    tuples.push_back({a, b, c, d});
    index.emplace(pack_quad(a, b, c, d), static_cast<Index>(tuples.size()));
  }

  Index at(int a, int b, int c, int d) const {
    auto it = index.find(pack_quad(a, b, c, d));
    if (it == index.end())
      throw InvalidConfiguration("paren symbol lookup failed: " +
                                 to_string(quad_paren_symbol(a, b, c, d)));
    return it->second;
  }

  Index of(const SignedSymbol& s) const {
    if (s.is_identity) throw InvalidConfiguration("identity has no generator index");
    return at(s.symbol.a, s.symbol.b, s.symbol.c, s.symbol.d);
  }
};

bool has_fano_type_minors(const Matroid& m) {
  return has_fano_minor(m) || has_dual_fano_minor(m);
}

Presentation build_tm2_impl(const Matroid& m, const CircuitOrder& order,
                            const Configurations& conf, const Tm2Symbols& sym) {
  Presentation p;
  p.num_generators = static_cast<Index>(sym.tuples.size()) + 1;
  p.labels.push_back(xi_symbol());
  for (const auto& t : sym.tuples) p.labels.push_back(quad_square_symbol(t[0], t[1], t[2], t[3]));

  // The sign generator has order two.
  p.relations.push_back(RelationBuilder().add(0, 2).done());
  // Fano-type minors kill the sign.
  if (has_fano_type_minors(m)) p.relations.push_back(RelationBuilder().add(0, 1).done());
  // Symbols with an equal last pair collapse.
  for (std::size_t i = 0; i < sym.tuples.size(); ++i)
    if (sym.tuples[i][2] == sym.tuples[i][3])
      p.relations.push_back(RelationBuilder().add(static_cast<Index>(i + 1), 1).done());
  // Swap symmetry between the two pairs.
  for (const auto& t : sym.tuples) {
    assert(sym.has(t[2], t[3], t[0], t[1]));
    p.relations.push_back(RelationBuilder()
                              .add(sym.at(t[0], t[1], t[2], t[3]), 1)
                              .add(sym.at(t[2], t[3], t[0], t[1]), -1)
                              .done());
  }
  // [i1 i2|i3 i4][i1 i2|i4 i5][i1 i2|i5 i3] = 1 whenever all three
  // symbols are generators.
  {
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_first_pair;
    for (const auto& t : conf.g2_tuples)
      by_first_pair[{t[0], t[1]}].emplace_back(t[2], t[3]);
    for (const auto& [first, seconds] : by_first_pair) {
      const auto [i1, i2] = first;
      for (const auto& [i3, i4] : seconds)
        for (int i5 = 0; i5 < conf.k; ++i5) {
          if (!conf.has(i1, i2, i4, i5) || !conf.has(i1, i2, i5, i3)) continue;
          p.relations.push_back(RelationBuilder()
                                    .add(sym.at(i1, i2, i3, i4), 1)
                                    .add(sym.at(i1, i2, i4, i5), 1)
                                    .add(sym.at(i1, i2, i5, i3), 1)
                                    .done());
        }
    }
  }
  // [i1 i2|i3 i4][i1 i4|i2 i3][i1 i3|i4 i2] = xi.
  for (const auto& t : conf.g2_tuples) {
    const int i1 = t[0], i2 = t[1], i3 = t[2], i4 = t[3];
    if (!conf.has(i1, i4, i2, i3) || !conf.has(i1, i3, i4, i2)) continue;
    p.relations.push_back(RelationBuilder()
                              .add(sym.at(i1, i2, i3, i4), 1)
                              .add(sym.at(i1, i4, i2, i3), 1)
                              .add(sym.at(i1, i3, i4, i2), 1)
                              .add(0, -1)
                              .done());
  }
  // [i1 i2|i6 i9][i2 i3|i4 i7][i3 i1|i5 i8] = 1 per triangle family;
  // families whose symbols fall outside the generator set are skipped.
  for (const TriangleFamily& f : triangle_families(order)) {
    const auto& x = f.idx;
    if (!conf.has(x[0], x[1], x[5], x[8]) || !conf.has(x[1], x[2], x[3], x[6]) ||
        !conf.has(x[2], x[0], x[4], x[7]))
      continue;
    p.relations.push_back(RelationBuilder()
                              .add(sym.at(x[0], x[1], x[5], x[8]), 1)
                              .add(sym.at(x[1], x[2], x[3], x[6]), 1)
                              .add(sym.at(x[2], x[0], x[4], x[7]), 1)
                              .done());
  }
  return p;
}

Presentation build_tmi0_impl(const Matroid& m, const CircuitOrder& order,
                             const Tmi0Symbols& sym) {
  Presentation p;
  p.num_generators = static_cast<Index>(sym.tuples.size()) + 1;
  p.labels.push_back(eta_symbol());
  for (const auto& t : sym.tuples) p.labels.push_back(quad_paren_symbol(t[0], t[1], t[2], t[3]));

  // The sign generator has order two.
  p.relations.push_back(RelationBuilder().add(0, 2).done());
  // Fano-type minors kill the sign.
  if (has_fano_type_minors(m)) p.relations.push_back(RelationBuilder().add(0, 1).done());
  // (j1 j2|j3 j4)(j1 j4|j2 j3)(j1 j3|j2 j4)^-1 = eta per line quadruple.
  for (const auto& q : sym.quadruples)
    p.relations.push_back(RelationBuilder()
                              .add(sym.at(q[0], q[1], q[2], q[3]), 1)
                              .add(sym.at(q[0], q[3], q[1], q[2]), 1)
                              .add(sym.at(q[0], q[2], q[1], q[3]), -1)
                              .add(0, -1)
                              .done());
  // Ten three-term equations per 5-subset with dim-1 union, one per
  // unordered pair {a,b} of the five indices: the normalized images of
  // [C_a C_b|C_x C_y][C_a C_b|C_y C_z][C_a C_b|C_z C_x] over the
  // remaining indices {x,y,z}. NB: the sixth equation ends in
  // (C1 C5|C2 C4)^-1; ending it in (C1 C5|C2 C3)^-1 (the fifth
  // equation's tail) would collapse a free factor on U_3(5). The
  // regression test covers that variant.
  {
    static constexpr int kEquations[10][3][4] = {
        {{1, 2, 3, 4}, {1, 2, 4, 5}, {1, 2, 3, 5}},
        {{1, 3, 2, 4}, {1, 3, 4, 5}, {1, 3, 2, 5}},
        {{1, 4, 2, 3}, {1, 4, 3, 5}, {1, 4, 2, 5}},
        {{1, 5, 2, 3}, {1, 5, 3, 4}, {1, 5, 2, 4}},
        {{1, 4, 2, 3}, {2, 3, 4, 5}, {1, 5, 2, 3}},
        {{1, 3, 2, 4}, {2, 4, 3, 5}, {1, 5, 2, 4}},
        {{1, 3, 2, 5}, {2, 5, 3, 4}, {1, 4, 2, 5}},
        {{1, 2, 3, 4}, {2, 5, 3, 4}, {1, 5, 3, 4}},
        {{1, 2, 3, 5}, {2, 4, 3, 5}, {1, 4, 3, 5}},
        {{1, 2, 4, 5}, {2, 3, 4, 5}, {1, 3, 4, 5}}};
    const int k = order.count();
    const auto& c = order.circuits();
    std::array<int, 5> j{};
    for (j[0] = 0; j[0] < k; ++j[0])
      for (j[1] = j[0] + 1; j[1] < k; ++j[1])
        for (j[2] = j[1] + 1; j[2] < k; ++j[2])
          for (j[3] = j[2] + 1; j[3] < k; ++j[3])
            for (j[4] = j[3] + 1; j[4] < k; ++j[4]) {
              const ElementSet u = c[j[0]] | c[j[1]] | c[j[2]] | c[j[3]] | c[j[4]];
              if (order.dim_of(u) != 1) continue;
              for (const auto& eq : kEquations) {
                RelationBuilder rel;
                rel.add(sym.at(j[eq[0][0] - 1], j[eq[0][1] - 1], j[eq[0][2] - 1], j[eq[0][3] - 1]),
                        1);
                rel.add(sym.at(j[eq[1][0] - 1], j[eq[1][1] - 1], j[eq[1][2] - 1], j[eq[1][3] - 1]),
                        1);
                rel.add(sym.at(j[eq[2][0] - 1], j[eq[2][1] - 1], j[eq[2][2] - 1], j[eq[2][3] - 1]),
                        -1);
                p.relations.push_back(rel.done());
              }
            }
  }
  // The three-term bracket product per filtered triangle family.
  for (const TriangleFamily& f : s5_families(m, order)) {
    const auto& x = f.idx;
    RelationBuilder rel;
    for (const SignedSymbol& s :
         {bracket_normalize(order, x[0], x[1], x[5], x[8]),
          bracket_normalize(order, x[1], x[2], x[3], x[6]),
          bracket_normalize(order, x[2], x[0], x[4], x[7])}) {
      if (s.is_identity) continue;
      rel.add(sym.of(s), s.sign);
    }
    p.relations.push_back(rel.done());
  }
  return p;
}

}  // namespace

std::pair<Presentation, IntMatrix> build_extended(const Matroid& m) {
  return build_extended(m, CircuitOrder::canonical(m));
}

std::pair<Presentation, IntMatrix> build_extended(const Matroid& m, const CircuitOrder& order) {
  const auto& circuits = order.circuits();
  const std::vector<ElementSet> cocircuits = cocircuits_of(m);
  const int n = m.ground_size();
  const int nc = static_cast<int>(circuits.size());
  const int nd = static_cast<int>(cocircuits.size());

  Presentation p;
  p.labels.push_back(epsilon_symbol());
  std::unordered_map<std::uint64_t, Index> circuit_gen, cocircuit_gen;
  for (int ci = 0; ci < nc; ++ci)
    for (int x : circuits[static_cast<std::size_t>(ci)].indices()) {
      circuit_gen.emplace(pack_quad(0, 0, ci, x), static_cast<Index>(p.labels.size()));
      p.labels.push_back(circuit_elem_symbol(ci, x));
    }
  for (int di = 0; di < nd; ++di)
    for (int y : cocircuits[static_cast<std::size_t>(di)].indices()) {
      cocircuit_gen.emplace(pack_quad(0, 0, di, y), static_cast<Index>(p.labels.size()));
      p.labels.push_back(cocircuit_elem_symbol(di, y));
    }
  p.num_generators = static_cast<Index>(p.labels.size());

  auto cgen = [&](int ci, int x) { return circuit_gen.at(pack_quad(0, 0, ci, x)); };
  auto dgen = [&](int di, int y) { return cocircuit_gen.at(pack_quad(0, 0, di, y)); };

  p.relations.push_back(RelationBuilder().add(0, 2).done());
  for (int ci = 0; ci < nc; ++ci)
    for (int di = 0; di < nd; ++di) {
      const ElementSet common = circuits[static_cast<std::size_t>(ci)] &
                                cocircuits[static_cast<std::size_t>(di)];
      if (common.size() != 2) continue;
      const auto xy = common.indices();
      p.relations.push_back(RelationBuilder()
                                .add(cgen(ci, xy[0]), 1)
                                .add(dgen(di, xy[0]), 1)
                                .add(cgen(ci, xy[1]), -1)
                                .add(dgen(di, xy[1]), -1)
                                .add(0, -1)
                                .done());
    }

  IntMatrix lambda = IntMatrix::Zero(n + nc + nd, p.num_generators);
  for (int ci = 0; ci < nc; ++ci)
    for (int x : circuits[static_cast<std::size_t>(ci)].indices()) {
      lambda(x, cgen(ci, x)) = 1;
      lambda(n + ci, cgen(ci, x)) = 1;
    }
  for (int di = 0; di < nd; ++di)
    for (int y : cocircuits[static_cast<std::size_t>(di)].indices()) {
      lambda(y, dgen(di, y)) = -1;
      lambda(n + nc + di, dgen(di, y)) = 1;
    }

  // The degree map must vanish on every relation.
  for (const SparseVec& r : p.relations) {
    IntVector image = IntVector::Zero(lambda.rows());
    for (const auto& [i, coeff] : r) image += lambda.col(i) * coeff;
    for (Index i = 0; i < image.size(); ++i)
      if (image(i) != 0)
        throw IllDefined("degree map does not vanish on an extended relation");
  }
  return {std::move(p), std::move(lambda)};
}

Presentation build_tm2(const Matroid& m) { return build_tm2(m, CircuitOrder::canonical(m)); }

Presentation build_tm2(const Matroid& m, const CircuitOrder& order) {
  Configurations conf(order);
  Tm2Symbols sym(conf);
  return build_tm2_impl(m, order, conf, sym);
}

Presentation build_tmi0(const Matroid& m, const CircuitOrder& order) {
  Tmi0Symbols sym(order);
  return build_tmi0_impl(m, order, sym);
}

Method method_from_string(const std::string& s) {
  if (s == "kernel") return Method::kernel;
  if (s == "tm2") return Method::tm2;
  if (s == "tmi0") return Method::tmi0;
  throw InvalidConfiguration("unknown method: " + s);
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kernel: return "kernel";
    case Method::tm2: return "tm2";
    case Method::tmi0: return "tmi0";
  }
  return "?";
}

GroupInvariants inner_invariants(const Matroid& m, Method method) {
  const CircuitOrder order = CircuitOrder::canonical(m);
  switch (method) {
    case Method::kernel: {
      auto [p, lambda] = build_extended(m, order);
      return invariants(kernel_presentation(p, lambda));
    }
    case Method::tm2:
      return invariants(build_tm2(m, order));
    case Method::tmi0:
      return invariants(build_tmi0(m, order));
  }
  throw InvalidConfiguration("unknown method");
}

std::vector<IntVector> tutte_subgroup_generators(const Presentation& extended) {
  std::vector<IntVector> gens;
  auto unit = [&](Index i) {
    IntVector v = IntVector::Zero(extended.num_generators);
    v(i) = 1;
    return v;
  };
  // epsilon
  for (Index i = 0; i < extended.num_generators; ++i)
    if (extended.labels[static_cast<std::size_t>(i)].kind == GeneratorSymbol::Kind::epsilon)
      gens.push_back(unit(i));
  // C(x) - C(y) and D(x) - D(y) for consecutive incidences of the same
  // (co)circuit; these span all differences.
  for (auto kind :
       {GeneratorSymbol::Kind::circuit_elem, GeneratorSymbol::Kind::cocircuit_elem}) {
    for (Index i = 0; i + 1 < extended.num_generators; ++i) {
      const auto& a = extended.labels[static_cast<std::size_t>(i)];
      const auto& b = extended.labels[static_cast<std::size_t>(i + 1)];
      if (a.kind == kind && b.kind == kind && a.a == b.a) {
        IntVector v = unit(i);
        v(i + 1) = -1;
        gens.push_back(std::move(v));
      }
    }
  }
  return gens;
}

IsoMaps phi_psi_maps(const Matroid&, const CircuitOrder& order) {
  Configurations conf(order);
  Tm2Symbols tm2(conf);
  Tmi0Symbols tmi0(order);
  const Index num_tm2 = static_cast<Index>(tm2.tuples.size()) + 1;
  const Index num_tmi0 = static_cast<Index>(tmi0.tuples.size()) + 1;

  IsoMaps maps;
  maps.phi = IntMatrix::Zero(num_tmi0, num_tm2);
  maps.psi = IntMatrix::Zero(num_tm2, num_tmi0);

  maps.phi(0, 0) = 1;  // phi(xi) = eta
  for (std::size_t i = 0; i < tm2.tuples.size(); ++i) {
    const auto& t = tm2.tuples[i];
    const SignedSymbol s = bracket_normalize(order, t[0], t[1], t[2], t[3]);
    if (!s.is_identity) maps.phi(tmi0.of(s), static_cast<Index>(i + 1)) = s.sign;
  }

  maps.psi(0, 0) = 1;  // psi(eta) = xi
  for (std::size_t i = 0; i < tmi0.tuples.size(); ++i) {
    const auto& t = tmi0.tuples[i];
    if (!tm2.has(t[0], t[1], t[2], t[3]))
      throw VerificationFailure(
          "psi image " + to_string(quad_square_symbol(t[0], t[1], t[2], t[3])) +
          " is not a valid square-bracket generator");
    maps.psi(tm2.at(t[0], t[1], t[2], t[3]), static_cast<Index>(i + 1)) = 1;
  }
  return maps;
}

namespace {

std::string format_relation(const Presentation& p, const SparseVec& r) {
  if (r.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, coeff] : r) {
    if (!first) out << " ";
    out << (coeff < 0 ? "-" : "+");
    Int mag = abs(coeff);
    if (mag != 1) out << mag << "*";
    if (!p.labels.empty())
      out << to_string(p.labels[static_cast<std::size_t>(i)]);
    else
      out << "g" << i;
    first = false;
  }
  return out.str();
}

}  // namespace

IsomorphismStats verify_isomorphism(const Matroid& m) {
  const CircuitOrder order = CircuitOrder::canonical(m);
  const Presentation tm2 = build_tm2(m, order);
  const Presentation tmi0 = build_tmi0(m, order);
  const IsoMaps maps = phi_psi_maps(m, order);

  const RelationLattice tm2_lattice(tm2);
  const RelationLattice tmi0_lattice(tmi0);

  IsomorphismStats stats;

  // Every square-bracket relation maps to zero under phi.
  for (const SparseVec& r : tm2.relations) {
    IntVector image = IntVector::Zero(tmi0.num_generators);
    for (const auto& [i, coeff] : r) image += maps.phi.col(i) * coeff;
    IntVector residue = tmi0_lattice.reduce(image);
    for (Index i = 0; i < residue.size(); ++i)
      if (residue(i) != 0)
        throw VerificationFailure("phi image of relation " + format_relation(tm2, r) +
                                  " does not vanish in the small presentation");
    stats.tm2_relations_checked++;
  }

  // Every small-presentation relation maps to zero under psi.
  for (const SparseVec& r : tmi0.relations) {
    IntVector image = IntVector::Zero(tm2.num_generators);
    for (const auto& [i, coeff] : r) image += maps.psi.col(i) * coeff;
    IntVector residue = tm2_lattice.reduce(image);
    for (Index i = 0; i < residue.size(); ++i)
      if (residue(i) != 0)
        throw VerificationFailure("psi image of relation " + format_relation(tmi0, r) +
                                  " does not vanish in the square-bracket presentation");
    stats.tmi0_relations_checked++;
  }

  // phi o psi is the identity on every generator of the small
  // presentation.
  for (Index g = 0; g < tmi0.num_generators; ++g) {
    IntVector roundtrip = IntVector::Zero(tmi0.num_generators);
    for (Index s = 0; s < tm2.num_generators; ++s)
      if (maps.psi(s, g) != 0) roundtrip += maps.phi.col(s) * maps.psi(s, g);
    roundtrip(g) -= 1;
    IntVector residue = tmi0_lattice.reduce(roundtrip);
    for (Index i = 0; i < residue.size(); ++i)
      if (residue(i) != 0)
        throw VerificationFailure("phi(psi(g)) != g for generator " +
                                  to_string(tmi0.labels[static_cast<std::size_t>(g)]));
    stats.generators_roundtripped++;
  }

  const GroupInvariants inv_tm2 = invariants_of_basis(tm2_lattice.basis(), tm2.num_generators);
  const GroupInvariants inv_tmi0 =
      invariants_of_basis(tmi0_lattice.basis(), tmi0.num_generators);
  auto [ext, lambda] = build_extended(m, order);
  const GroupInvariants inv_kernel = invariants(kernel_presentation(ext, lambda));
  if (!(inv_tm2 == inv_tmi0) || !(inv_tm2 == inv_kernel))
    throw VerificationFailure("invariants disagree: tm2 " + to_string(inv_tm2) + ", tmi0 " +
                              to_string(inv_tmi0) + ", kernel " + to_string(inv_kernel));
  stats.invariants = inv_tm2;
  return stats;
}

}  // namespace itg
