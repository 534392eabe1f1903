#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itg/lattice.hpp"
#include "itg/matroid.hpp"
#include "itg/symbols.hpp"

namespace itg {

// Packed circuit-index quadruple, used as a hash key.
inline std::uint64_t pack_quad(int a, int b, int c, int d) {
  return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(a)) << 48) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(b)) << 32) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(c)) << 16) |
         static_cast<std::uint64_t>(static_cast<std::uint16_t>(d));
}

struct InvalidConfiguration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A circuit enumeration with a total order. The canonical order sorts
// circuits by (size, lexicographic element order), which is deterministic
// and stable under element relabeling of equal circuits.
class CircuitOrder {
 public:
  static CircuitOrder canonical(const Matroid& m);

  // Canonical circuits rearranged by perm: circuit i of this order is
  // canonical circuit perm[i]. Used to test order independence.
  static CircuitOrder permuted(const Matroid& m, const std::vector<int>& perm);

  const Matroid& matroid() const { return matroid_; }
  const std::vector<ElementSet>& circuits() const { return circuits_; }
  int count() const { return static_cast<int>(circuits_.size()); }
  ElementSet circuit(int i) const { return circuits_[static_cast<std::size_t>(i)]; }
  int dim_of(ElementSet f) const { return matroid_.dim_of(f); }

 private:
  CircuitOrder(Matroid m, std::vector<ElementSet> circuits);
  Matroid matroid_;
  std::vector<ElementSet> circuits_;
};

// The nine-circuit configuration behind the triangle relation family: a
// triangle of circuits spanning a plane, with two transversal circuit
// triples.
// Positions 0..2 hold the triangle, 3..5 and 6..8 the transversals;
// circuit at position s+3 and s+6 lies on the line opposite position s.
struct TriangleFamily {
  std::array<int, 9> idx;
  std::array<ElementSet, 3> line_sets;
  ElementSet plane_set;
};

// All 4-subsets {a<b<c<d} of circuit indices whose union has dim 1,
// in lexicographic order.
std::vector<std::array<int, 4>> line_quadruples(const CircuitOrder& order);
std::vector<std::array<int, 4>> line_quadruples(const Matroid& m);

// Generators of the small presentation: eta plus, per line quadruple
// {a<b<c<d}, the pairings (ab|cd), (ac|bd), (ad|bc).
std::vector<GeneratorSymbol> q2_symbols(const CircuitOrder& order);
long g_count(const Matroid& m);

// Generators of the square-bracket presentation: xi plus every ordered
// quadruple (i1,i2,i3,i4) whose four cross-pair unions all equal the full
// union L with dim(L) = 1.
std::vector<GeneratorSymbol> g2_symbols(const CircuitOrder& order);
long G_count(const Matroid& m);

// The nine-case normalization of a bracket <C_d1 C_d2 | C_d3 C_d4> into
// the identity or a signed canonical paren symbol.
SignedSymbol bracket_normalize(const CircuitOrder& order, int d1, int d2, int d3, int d4);

std::vector<TriangleFamily> triangle_families(const CircuitOrder& order);
std::vector<TriangleFamily> triangle_families(const Matroid& m);

// Triangle families filtered by the small presentation's side
// conditions: triangle indices ascending, and not
// (j4 >= j7 and j5 >= j8 and j6 >= j9).
std::vector<TriangleFamily> s5_families(const Matroid& m, const CircuitOrder& order);

// Extended presentation: generators epsilon, C(x), D(y); relations
// 2 epsilon and C(x)+D(x)-C(y)-D(y)-epsilon over all circuit/cocircuit
// pairs with |C and D| = 2. The returned matrix is the degree map into
// Z^|E| x Z^|C| x Z^|C*|, one row per coordinate.
std::pair<Presentation, IntMatrix> build_extended(const Matroid& m);
std::pair<Presentation, IntMatrix> build_extended(const Matroid& m, const CircuitOrder& order);

// Square-bracket presentation: the sign generator with its order-2 and
// minor relations, degenerate-pair collapse, swap symmetry, two
// three-term product families and the triangle-family products.
Presentation build_tm2(const Matroid& m);
Presentation build_tm2(const Matroid& m, const CircuitOrder& order);

// Small presentation: the sign generator plus one relation per line
// quadruple, the ten product equations per dim-1 five-subset, and the
// filtered triangle-family products.
Presentation build_tmi0(const Matroid& m, const CircuitOrder& order);

enum class Method { kernel, tm2, tmi0 };

Method method_from_string(const std::string& s);
std::string to_string(Method m);

GroupInvariants inner_invariants(const Matroid& m, Method method);

// Generators of the Tutte subgroup inside the extended presentation:
// epsilon together with the differences C(x)-C(y) and D(x)-D(y).
std::vector<IntVector> tutte_subgroup_generators(const Presentation& extended);

// phi maps each square-bracket generator to its bracket normalization in
// the small presentation; psi maps eta to xi and each paren generator to
// the square-bracket generator with the same indices.
struct IsoMaps {
  IntMatrix phi;  // (#tmi0 generators) x (#tm2 generators)
  IntMatrix psi;  // (#tm2 generators) x (#tmi0 generators)
};

IsoMaps phi_psi_maps(const Matroid& m, const CircuitOrder& order);

struct IsomorphismStats {
  long tm2_relations_checked = 0;
  long tmi0_relations_checked = 0;
  long generators_roundtripped = 0;
  GroupInvariants invariants;
};

// Executes the isomorphism proof: every relation of each presentation
// maps to zero in the other, phi o psi is the identity on generators,
// and the invariants of all three constructions agree. Throws
// VerificationFailure naming the offending relation instance.
IsomorphismStats verify_isomorphism(const Matroid& m);

}  // namespace itg
