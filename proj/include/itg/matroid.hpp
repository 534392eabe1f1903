#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "itg/element_set.hpp"

namespace itg {

struct MatroidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A proposed circuit or basis family violates one of the matroid axioms.
struct AxiomViolation : MatroidError {
  enum class Kind { minimality, elimination, exchange };
  AxiomViolation(Kind k, const std::string& what) : MatroidError(what), kind(k) {}
  Kind kind;
};

struct EmptyFamily : MatroidError {
  using MatroidError::MatroidError;
};

struct NotCircuitHyperplane : MatroidError {
  using MatroidError::MatroidError;
};

// Matroid on ground set {0,...,n-1}, represented by its circuit family.
// Circuits are stored sorted lexicographically; the rank is cached at
// construction. Values are immutable and cheap to share.
class Matroid {
 public:
  // Validates circuit minimality and the elimination axiom.
  static Matroid from_circuits(int ground_size, std::vector<ElementSet> circuits);

  // Validates the basis exchange axiom, then derives circuits as the
  // minimal sets contained in no basis.
  static Matroid from_bases(int ground_size, const std::vector<ElementSet>& bases);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<ElementSet>& circuits() const { return circuits_; }

  // Rank of an arbitrary subset, computed by greedy growth of an
  // independent set (not by iterating bases).
  int rank_of(ElementSet s) const;

  bool is_independent(ElementSet s) const;

  // dim(F) = |F| - rk(F) - 1 for a union of circuits F.
  int dim_of(ElementSet f) const { return f.size() - rank_of(f) - 1; }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Matroid with_name(std::string name) const;
  Matroid with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.circuits_ == b.circuits_;
  }

 private:
  Matroid() = default;

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> circuits_;
  std::vector<std::uint8_t> rank_table_;  // indexed by mask when n_ <= 16
  std::string name_;
  std::vector<std::string> labels_;
};

Matroid uniform_matroid(int rank, int ground_size);

// All bases, ordered lexicographically.
std::vector<ElementSet> bases_of(const Matroid& m);

// Cocircuits (circuits of the dual), sorted by (size, lex).
std::vector<ElementSet> cocircuits_of(const Matroid& m);

Matroid dual(const Matroid& m);

// Restriction to the complement of t; elements are re-indexed
// order-preserving.
Matroid delete_elements(const Matroid& m, ElementSet t);

// contract(m, t) = dual(delete(dual(m), t)).
Matroid contract(const Matroid& m, ElementSet t);

Matroid direct_sum(const Matroid& a, const Matroid& b);

// Element partition under the closure of "co-occur in a circuit";
// elements in no circuit are singleton blocks. Blocks are sorted.
std::vector<std::vector<int>> connected_components(const Matroid& m);

int connected_component_count(const Matroid& m);

// Relaxes a circuit-hyperplane c (a circuit of size rank(m) that is
// closed): the result has bases(m) plus c as bases.
Matroid relax(const Matroid& m, ElementSet c);

// Circuit-hyperplanes in circuit-family order.
std::vector<ElementSet> circuit_hyperplanes(const Matroid& m);

// A union of circuits F with its dimension |F| - rk(F) - 1.
struct CircuitUnion {
  std::vector<int> circuit_indices;
  ElementSet union_set;
  int dim = 0;
};

CircuitUnion circuit_union(const Matroid& m, std::vector<int> circuit_indices);

// dim of the union of the named circuits.
int dim_of_union(const Matroid& m, const std::vector<int>& circuit_indices);

// Element bijection carrying the circuit family of a onto that of b,
// or nullopt. Backtracking over element assignments, pruned by
// circuit-membership degree signatures.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);

bool is_isomorphic(const Matroid& a, const Matroid& b);

// Exhaustive minor search for F7 (resp. its dual) over all disjoint
// (delete, contract) pairs leaving 7 elements.
bool has_fano_minor(const Matroid& m);
bool has_dual_fano_minor(const Matroid& m);

}  // namespace itg
