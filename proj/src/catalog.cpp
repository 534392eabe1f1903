#include "itg/catalog.hpp"

#include <map>

namespace itg {

namespace {

// Cycle matroid of the complete graph on `vertices` vertices. Edges are
// indexed in lexicographic pair order; independent = acyclic.
Matroid complete_graph_matroid(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
  const int ne = static_cast<int>(edges.size());
  std::vector<ElementSet> trees;
  const std::uint32_t full = ElementSet::full(ne).mask();
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) != vertices - 1) continue;
    // Union-find acyclicity check.
    std::vector<int> parent(vertices);
    for (int i = 0; i < vertices; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (int e : ElementSet(mask).indices()) {
      int ru = find(edges[e].first), rv = find(edges[e].second);
      if (ru == rv) {
        acyclic = false;
        break;
      }
      parent[ru] = rv;
    }
    if (acyclic) trees.push_back(ElementSet(mask));
  }
  return Matroid::from_bases(ne, trees);
}

// Simple rank-3 matroid defined by its 3-point lines (pairwise meeting in
// at most one point). Circuits are the lines plus every 4-set containing
// no line.
Matroid rank3_from_lines(int n, const std::vector<ElementSet>& lines) {
  std::vector<ElementSet> circuits = lines;
  const std::uint32_t full = ElementSet::full(n).mask();
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) != 4) continue;
    bool contains_line = false;
    for (ElementSet l : lines)
      if (l.subset_of(ElementSet(mask))) {
        contains_line = true;
        break;
      }
    if (!contains_line) circuits.push_back(ElementSet(mask));
  }
  return Matroid::from_circuits(n, std::move(circuits));
}

Matroid fano() {
  // Standard Fano labeling: lines {i, i+1, i+3} mod 7.
  std::vector<ElementSet> lines;
  for (int i = 0; i < 7; ++i) lines.push_back(ElementSet::of({i, (i + 1) % 7, (i + 3) % 7}));
  return rank3_from_lines(7, lines);
}

// Rank-3 ternary spike: tip 0, legs {0,1,2}, {0,3,4}, {0,5,6}, and the
// two transversal lines {1,3,5}, {2,4,6}.
Matroid p7() {
  std::vector<ElementSet> lines = {
      ElementSet::of({0, 1, 2}), ElementSet::of({0, 3, 4}), ElementSet::of({0, 5, 6}),
      ElementSet::of({1, 3, 5}), ElementSet::of({2, 4, 6})};
  return rank3_from_lines(7, lines);
}

// Two disjoint 3-point lines, no other dependencies.
Matroid r6() {
  return rank3_from_lines(6, {ElementSet::of({0, 1, 2}), ElementSet::of({3, 4, 5})});
}

Matroid relax_first(const Matroid& m) {
  auto ch = circuit_hyperplanes(m);
  if (ch.empty()) throw MatroidError("no circuit-hyperplane to relax");
  return relax(m, ch.front());
}

std::map<std::string, Matroid> build_catalog() {
  std::map<std::string, Matroid> cat;
  cat.emplace("U_2(4)", uniform_matroid(2, 4));
  cat.emplace("U_2(5)", uniform_matroid(2, 5));
  cat.emplace("U_3(5)", uniform_matroid(3, 5));
  const Matroid mk4 = complete_graph_matroid(4);
  cat.emplace("M(K4)", mk4);
  const Matroid w3 = relax_first(mk4);
  const Matroid q6 = relax_first(w3);
  const Matroid p6 = relax_first(q6);
  cat.emplace("W3", w3);
  cat.emplace("Q6", q6);
  cat.emplace("P6", p6);
  cat.emplace("U_3(6)", uniform_matroid(3, 6));
  cat.emplace("R6", r6());
  const Matroid f7 = fano();
  cat.emplace("F7", f7);
  cat.emplace("F7*", dual(f7));
  const Matroid f7m = relax_first(f7);
  cat.emplace("F7-", f7m);
  cat.emplace("(F7-)*", dual(f7m));
  cat.emplace("P7", p7());
  for (auto& [name, m] : cat) m = m.with_name(name);
  return cat;
}

const std::map<std::string, Matroid>& catalog() {
  static const std::map<std::string, Matroid> cat = build_catalog();
  return cat;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "U_2(4)", "U_2(5)", "U_3(5)", "M(K4)", "W3",  "Q6",  "P6",
      "U_3(6)", "R6",     "F7",     "F7*",   "F7-", "(F7-)*", "P7"};
  return names;
}

Matroid catalog_get(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw UnknownName("unknown catalog matroid: " + name);
  return it->second;
}

bool catalog_has(const std::string& name) { return catalog().count(name) != 0; }

}  // namespace itg
