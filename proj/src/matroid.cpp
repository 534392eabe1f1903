#include "itg/matroid.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

namespace itg {

namespace {

constexpr int kMaxGround = 31;
constexpr int kRankTableLimit = 16;
constexpr int kSubsetEnumLimit = 20;

std::string set_to_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.indices()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

void check_ground_size(int n) {
  if (n < 0 || n > kMaxGround)
    throw MatroidError("ground size out of range: " + std::to_string(n));
}

void sort_family(std::vector<ElementSet>& family) {
  std::sort(family.begin(), family.end(), ElementSet::lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

// Minimal dependent sets, where dependent means "contained in no basis".
// Searches subsets in increasing size order.
std::vector<ElementSet> circuits_from_bases(int n, const std::vector<ElementSet>& bases,
                                            int basis_size) {
  if (n > kSubsetEnumLimit)
    throw MatroidError("subset enumeration not supported beyond 20 elements");
  const std::uint32_t full = ElementSet::full(n).mask();
  std::vector<bool> independent(std::size_t{1} << n, false);
  for (ElementSet b : bases) {
    // Subsets of a basis are independent.
    std::uint32_t sub = b.mask();
    for (;;) {
      independent[sub] = true;
      if (sub == 0) break;
      sub = (sub - 1) & b.mask();
    }
  }
  std::vector<ElementSet> circuits;
  std::vector<bool> has_dependent_subset(std::size_t{1} << n, false);
  std::vector<std::uint32_t> by_size[kSubsetEnumLimit + 2];
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int sz = std::popcount(mask);
    if (sz <= basis_size + 1) by_size[sz].push_back(mask);
  }
  for (int sz = 1; sz <= basis_size + 1; ++sz) {
    for (std::uint32_t mask : by_size[sz]) {
      bool proper_dep = false;
      for (std::uint32_t m = mask; m != 0 && !proper_dep; m &= m - 1) {
        std::uint32_t without = mask & ~(m & -m);
        if (!independent[without] || has_dependent_subset[without]) proper_dep = true;
      }
      if (proper_dep) {
        has_dependent_subset[mask] = true;
      } else if (!independent[mask]) {
        circuits.push_back(ElementSet(mask));
        has_dependent_subset[mask] = true;
      }
    }
  }
  sort_family(circuits);
  return circuits;
}

}  // namespace

Matroid Matroid::from_circuits(int ground_size, std::vector<ElementSet> circuits) {
  check_ground_size(ground_size);
  const ElementSet ground = ElementSet::full(ground_size);
  for (ElementSet c : circuits) {
    if (c.empty()) throw MatroidError("empty set is not a circuit");
    if (!c.subset_of(ground))
      throw MatroidError("circuit " + set_to_string(c) + " out of range");
  }
  sort_family(circuits);

  for (std::size_t i = 0; i < circuits.size(); ++i)
    for (std::size_t j = 0; j < circuits.size(); ++j)
      if (i != j && circuits[i].subset_of(circuits[j]))
        throw AxiomViolation(AxiomViolation::Kind::minimality,
                             "circuit " + set_to_string(circuits[i]) + " is contained in " +
                                 set_to_string(circuits[j]));

  // Supersets-of-circuits table: doubles as the O(1) "contains a
  // circuit" query for elimination checking and as the base of the rank
  // table.
  std::vector<bool> dependent;
  if (ground_size <= kRankTableLimit) {
    dependent.assign(std::size_t{1} << ground_size, false);
    for (ElementSet c : circuits) {
      const std::uint32_t cm = c.mask();
      const std::uint32_t free = ElementSet::full(ground_size).mask() & ~cm;
      std::uint32_t sub = 0;
      for (;;) {
        dependent[cm | sub] = true;
        if (sub == free) break;
        sub = (sub - free) & free;  // next superset fill
      }
    }
  }
  auto contains_circuit = [&](ElementSet target) {
    if (!dependent.empty()) return static_cast<bool>(dependent[target.mask()]);
    for (ElementSet c : circuits)
      if (c.subset_of(target)) return true;
    return false;
  };

  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      ElementSet common = circuits[i] & circuits[j];
      for (int e : common.indices()) {
        ElementSet target = (circuits[i] | circuits[j]);
        target.erase(e);
        if (!contains_circuit(target))
          throw AxiomViolation(AxiomViolation::Kind::elimination,
                               "no circuit inside " + set_to_string(circuits[i]) + " u " +
                                   set_to_string(circuits[j]) + " minus " + std::to_string(e));
      }
    }
  }

  Matroid m;
  m.n_ = ground_size;
  m.circuits_ = std::move(circuits);
  if (!dependent.empty()) {
    // Greedy independent growth per mask, made O(n) by the table.
    const std::size_t words = std::size_t{1} << ground_size;
    m.rank_table_.assign(words, 0);
    for (std::uint32_t mask = 1; mask < words; ++mask) {
      std::uint32_t indep = 0;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        std::uint32_t bit = rest & -rest;
        if (!dependent[indep | bit]) indep |= bit;
      }
      m.rank_table_[mask] = static_cast<std::uint8_t>(std::popcount(indep));
    }
  }
  m.rank_ = m.rank_of(ElementSet::full(ground_size));
  return m;
}

Matroid Matroid::from_bases(int ground_size, const std::vector<ElementSet>& bases) {
  check_ground_size(ground_size);
  if (bases.empty()) throw EmptyFamily("no basis given");
  const ElementSet ground = ElementSet::full(ground_size);
  const int r = bases.front().size();
  for (ElementSet b : bases) {
    if (!b.subset_of(ground))
      throw MatroidError("basis " + set_to_string(b) + " out of range");
    if (b.size() != r)
      throw AxiomViolation(AxiomViolation::Kind::exchange,
                           "bases have unequal cardinality: " + set_to_string(bases.front()) +
                               " vs " + set_to_string(b));
  }
  std::vector<ElementSet> sorted = bases;
  sort_family(sorted);
  std::unordered_set<std::uint32_t> basis_set;
  for (ElementSet b : sorted) basis_set.insert(b.mask());
  for (ElementSet b1 : sorted) {
    for (ElementSet b2 : sorted) {
      for (int x : (b1 - b2).indices()) {
        bool ok = false;
        for (int y : (b2 - b1).indices()) {
          ElementSet cand = b1;
          cand.erase(x);
          cand.insert(y);
          if (basis_set.count(cand.mask())) {
            ok = true;
            break;
          }
        }
        if (!ok)
          throw AxiomViolation(AxiomViolation::Kind::exchange,
                               "exchange fails for " + set_to_string(b1) + ", " +
                                   set_to_string(b2) + " at element " + std::to_string(x));
      }
    }
  }
  return from_circuits(ground_size, circuits_from_bases(ground_size, sorted, r));
}

int Matroid::rank_of(ElementSet s) const {
  if (!rank_table_.empty()) return rank_table_[s.mask()];
  std::uint32_t indep = 0;
  for (std::uint32_t rest = s.mask(); rest != 0; rest &= rest - 1) {
    std::uint32_t bit = rest & -rest;
    if (is_independent(ElementSet(indep | bit))) indep |= bit;
  }
  return std::popcount(indep);
}

bool Matroid::is_independent(ElementSet s) const {
  for (ElementSet c : circuits_)
    if (c.subset_of(s)) return false;
  return true;
}

Matroid Matroid::with_name(std::string name) const {
  Matroid m = *this;
  m.name_ = std::move(name);
  return m;
}

Matroid Matroid::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
    throw MatroidError("label count does not match ground size");
  Matroid m = *this;
  m.labels_ = std::move(labels);
  return m;
}

Matroid uniform_matroid(int rank, int ground_size) {
  check_ground_size(ground_size);
  if (rank < 0 || rank > ground_size) throw MatroidError("uniform matroid rank out of range");
  std::vector<ElementSet> circuits;
  if (rank < ground_size) {
    const std::uint32_t full = ElementSet::full(ground_size).mask();
    for (std::uint32_t mask = 0; mask <= full; ++mask)
      if (std::popcount(mask) == rank + 1) circuits.push_back(ElementSet(mask));
  }
  return Matroid::from_circuits(ground_size, std::move(circuits));
}

std::vector<ElementSet> bases_of(const Matroid& m) {
  const int n = m.ground_size();
  if (n > kSubsetEnumLimit)
    throw MatroidError("subset enumeration not supported beyond 20 elements");
  std::vector<ElementSet> out;
  const std::uint32_t full = ElementSet::full(n).mask();
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) != m.rank()) continue;
    if (m.is_independent(ElementSet(mask))) out.push_back(ElementSet(mask));
    if (mask == full) break;
  }
  std::sort(out.begin(), out.end(), ElementSet::lex_less);
  return out;
}

std::vector<ElementSet> cocircuits_of(const Matroid& m) {
  std::vector<ElementSet> cc = dual(m).circuits();
  std::stable_sort(cc.begin(), cc.end(), [](ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return ElementSet::lex_less(a, b);
  });
  return cc;
}

Matroid dual(const Matroid& m) {
  const int n = m.ground_size();
  const ElementSet ground = ElementSet::full(n);
  std::vector<ElementSet> cobases;
  for (ElementSet b : bases_of(m)) cobases.push_back(ground - b);
  if (cobases.empty()) cobases.push_back(ElementSet());
  Matroid d = Matroid::from_bases(n, cobases);
  if (!m.name().empty()) d = d.with_name(m.name() + "*");
  return d;
}

Matroid delete_elements(const Matroid& m, ElementSet t) {
  const ElementSet kept = ElementSet::full(m.ground_size()) - t;
  std::vector<int> keep = kept.indices();
  std::vector<int> new_index(m.ground_size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_index[keep[i]] = static_cast<int>(i);
  std::vector<ElementSet> circuits;
  for (ElementSet c : m.circuits()) {
    if (!c.subset_of(kept)) continue;
    ElementSet mapped;
    for (int e : c.indices()) mapped.insert(new_index[e]);
    circuits.push_back(mapped);
  }
  return Matroid::from_circuits(static_cast<int>(keep.size()), std::move(circuits));
}

Matroid contract(const Matroid& m, ElementSet t) {
  if (t.empty()) return Matroid::from_circuits(m.ground_size(), m.circuits());
  return dual(delete_elements(dual(m), t));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  check_ground_size(a.ground_size() + b.ground_size());
  std::vector<ElementSet> circuits = a.circuits();
  for (ElementSet c : b.circuits())
    circuits.push_back(ElementSet(c.mask() << a.ground_size()));
  return Matroid::from_circuits(a.ground_size() + b.ground_size(), std::move(circuits));
}

std::vector<std::vector<int>> connected_components(const Matroid& m) {
  const int n = m.ground_size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet c : m.circuits()) {
    const int head = c.lowest();
    for (int e : c.indices()) parent[find(e)] = find(head);
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(n, -1);
  for (int e = 0; e < n; ++e) {
    int root = find(e);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(e);
  }
  return blocks;
}

int connected_component_count(const Matroid& m) {
  return static_cast<int>(connected_components(m).size());
}

std::vector<ElementSet> circuit_hyperplanes(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet c : m.circuits()) {
    if (c.size() != m.rank()) continue;
    bool closed = true;
    for (int e = 0; e < m.ground_size() && closed; ++e) {
      if (c.contains(e)) continue;
      ElementSet ext = c;
      ext.insert(e);
      if (m.rank_of(ext) == m.rank_of(c)) closed = false;
    }
    if (closed) out.push_back(c);
  }
  return out;
}

Matroid relax(const Matroid& m, ElementSet c) {
  auto hyperplanes = circuit_hyperplanes(m);
  if (std::find(hyperplanes.begin(), hyperplanes.end(), c) == hyperplanes.end())
    throw NotCircuitHyperplane(set_to_string(c) + " is not a circuit-hyperplane");
  std::vector<ElementSet> bases = bases_of(m);
  bases.push_back(c);
  return Matroid::from_bases(m.ground_size(), bases);
}

CircuitUnion circuit_union(const Matroid& m, std::vector<int> circuit_indices) {
  if (circuit_indices.empty()) throw MatroidError("circuit union needs a nonempty index set");
  CircuitUnion u;
  for (int i : circuit_indices) {
    if (i < 0 || i >= static_cast<int>(m.circuits().size()))
      throw MatroidError("circuit index out of range: " + std::to_string(i));
    u.union_set |= m.circuits()[static_cast<std::size_t>(i)];
  }
  u.circuit_indices = std::move(circuit_indices);
  u.dim = m.dim_of(u.union_set);
  return u;
}

int dim_of_union(const Matroid& m, const std::vector<int>& circuit_indices) {
  return circuit_union(m, circuit_indices).dim;
}

namespace {

// Per-element signature: how many circuits of each size contain it.
std::vector<std::vector<int>> element_signatures(const Matroid& m) {
  std::vector<std::vector<int>> sig(m.ground_size(),
                                    std::vector<int>(m.ground_size() + 2, 0));
  for (ElementSet c : m.circuits())
    for (int e : c.indices()) sig[e][c.size()]++;
  return sig;
}

struct IsoSearch {
  const Matroid& a;
  const Matroid& b;
  std::unordered_set<std::uint32_t> b_circuits;
  std::vector<int> map;       // a-element -> b-element, -1 unset
  std::vector<bool> used;     // b-elements already hit
  std::vector<std::vector<int>> sig_a, sig_b;

  bool extend(int e) {
    const int n = a.ground_size();
    if (e == n) return true;
    for (int f = 0; f < n; ++f) {
      if (used[f] || sig_a[e] != sig_b[f]) continue;
      map[e] = f;
      used[f] = true;
      if (consistent(e) && extend(e + 1)) return true;
      map[e] = -1;
      used[f] = false;
    }
    return false;
  }

  // Every circuit of a fully inside the assigned prefix must map to a
  // circuit of b.
  bool consistent(int last) const {
    for (ElementSet c : a.circuits()) {
      bool complete = true;
      std::uint32_t image = 0;
      for (int x : c.indices()) {
        if (x > last || map[x] < 0) {
          complete = false;
          break;
        }
        image |= (1u << map[x]);
      }
      if (complete && !b_circuits.count(image)) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size()) return std::nullopt;
  if (a.circuits().size() != b.circuits().size()) return std::nullopt;
  if (a.rank() != b.rank()) return std::nullopt;
  IsoSearch search{a, b, {}, std::vector<int>(a.ground_size(), -1),
                   std::vector<bool>(a.ground_size(), false), element_signatures(a),
                   element_signatures(b)};
  for (ElementSet c : b.circuits()) search.b_circuits.insert(c.mask());
  if (!search.extend(0)) return std::nullopt;
  // Image family has the right size and maps into b's circuits, hence onto.
  return search.map;
}

bool is_isomorphic(const Matroid& a, const Matroid& b) {
  return find_isomorphism(a, b).has_value();
}

namespace {

const Matroid& fano_matroid() {
  // Standard Fano plane: lines {i, i+1, i+3} mod 7.
  static const Matroid f7 = [] {
    std::vector<ElementSet> circuits;
    std::vector<ElementSet> lines;
    for (int i = 0; i < 7; ++i)
      lines.push_back(ElementSet::of({i, (i + 1) % 7, (i + 3) % 7}));
    circuits = lines;
    for (int i = 0; i < 7; ++i) circuits.push_back(ElementSet::full(7) - lines[i]);
    return Matroid::from_circuits(7, std::move(circuits));
  }();
  return f7;
}

bool has_minor_isomorphic_to(const Matroid& m, const Matroid& target) {
  const int n = m.ground_size();
  const int k = target.ground_size();
  if (n < k) return false;
  const std::uint32_t full = ElementSet::full(n).mask();
  for (std::uint32_t kept = 0; kept <= full; ++kept) {
    if (std::popcount(kept) != k) continue;
    const ElementSet removed = ElementSet(full & ~kept);
    const std::uint32_t rm = removed.mask();
    // Split removed into contracted (t) and deleted (rest).
    std::uint32_t t = 0;
    for (;;) {
      ElementSet contracted(t);
      ElementSet deleted = removed - contracted;
      // Minor rank via the rank function of m.
      const int minor_rank =
          m.rank_of(ElementSet(kept) | contracted) - m.rank_of(contracted);
      if (minor_rank == target.rank()) {
        Matroid minor = delete_elements(m, deleted);
        ElementSet shifted_t;
        {
          // Re-index contracted elements into the deleted-minor numbering.
          std::vector<int> keep_idx = (ElementSet::full(n) - deleted).indices();
          for (std::size_t i = 0; i < keep_idx.size(); ++i)
            if (contracted.contains(keep_idx[i])) shifted_t.insert(static_cast<int>(i));
        }
        minor = contract(minor, shifted_t);
        if (is_isomorphic(minor, target)) return true;
      }
      if (t == rm) break;
      t = (t - rm) & rm;
    }
    if (kept == full) break;
  }
  return false;
}

}  // namespace

bool has_fano_minor(const Matroid& m) { return has_minor_isomorphic_to(m, fano_matroid()); }

bool has_dual_fano_minor(const Matroid& m) {
  static const Matroid f7_dual = dual(fano_matroid());
  return has_minor_isomorphic_to(m, f7_dual);
}

}  // namespace itg
