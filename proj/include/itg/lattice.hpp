#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "itg/symbols.hpp"

namespace itg {

// All lattice arithmetic is exact. Entries of intermediate Hermite/Smith
// reductions can outgrow machine words, so the scalar is an
// arbitrary-precision integer.
using Int = boost::multiprecision::mpz_int;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntRowVector = Eigen::Matrix<Int, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IllDefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Floor division (quotient rounded toward minus infinity).
Int floor_div(const Int& a, const Int& b);

// Sparse relation vector: (generator index, coefficient) terms with
// distinct indices in increasing order, coefficients nonzero.
using SparseVec = std::vector<std::pair<Index, Int>>;

SparseVec to_sparse(const IntRowVector& v);
IntRowVector to_dense(const SparseVec& v, Index cols);

// Row basis of an integer lattice kept in reduced Hermite form: rows
// sorted by pivot column, pivots positive, entries above a pivot lie in
// [0, pivot). Rows are accumulated first; finalize() before querying.
class HermiteBasis {
 public:
  explicit HermiteBasis(Index cols);

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  void add(IntRowVector row);
  void add(const SparseVec& row);
  void finalize();
  bool finalized() const { return finalized_; }

  const std::vector<IntRowVector>& rows() const;
  const std::vector<Index>& pivots() const;
  IntMatrix matrix() const;

  // Canonical residue of v modulo the row lattice.
  IntRowVector reduce(IntRowVector v) const;
  bool reduces_to_zero(const SparseVec& v) const;

  // Quotients q with v = q * rows(), or nullopt if v is outside the
  // lattice.
  std::optional<IntRowVector> express(IntRowVector v) const;

 private:
  void eliminate(IntRowVector& v);

  Index cols_;
  bool finalized_ = false;
  std::vector<IntRowVector> rows_;   // echelon rows, sorted by pivot
  std::vector<Index> pivot_cols_;
};

// Row-style Hermite normal form of the row lattice of m; zero rows are
// dropped.
IntMatrix hnf(const IntMatrix& m);

// Diagonal of the Smith normal form: divisibility-ordered, zeros
// trailing, min(rows, cols) entries.
std::vector<Int> snf(IntMatrix m);

// Rows form a basis of the saturated kernel lattice {x : m x = 0},
// returned in reduced Hermite form.
IntMatrix kernel_basis(const IntMatrix& m);

// Isomorphism type of a finitely generated abelian group.
struct GroupInvariants {
  Index free_rank = 0;
  std::vector<Int> torsion;  // invariant factors d1 | d2 | ..., each >= 2

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

std::string to_string(const GroupInvariants& g);

// Finitely presented abelian group, additive notation: a relation vector
// r asserts sum_i r_i * gen_i = 0.
struct Presentation {
  Index num_generators = 0;
  std::vector<GeneratorSymbol> labels;  // empty or one per generator
  std::vector<SparseVec> relations;
};

// Relation matrix as a dense matrix (rows = relations).
IntMatrix relation_matrix(const Presentation& p);

// Lattice of the relations, built once for repeated reductions.
class RelationLattice {
 public:
  explicit RelationLattice(const Presentation& p);
  const HermiteBasis& basis() const { return basis_; }
  IntVector reduce(const IntVector& v) const;
  bool is_zero(const SparseVec& v) const { return basis_.reduces_to_zero(v); }

 private:
  HermiteBasis basis_;
};

GroupInvariants invariants(const Presentation& p);

// Invariants of Z^num_generators modulo an already-reduced relation
// lattice.
GroupInvariants invariants_of_basis(const HermiteBasis& basis, Index num_generators);

// Canonical residue of v modulo the relation lattice.
IntVector reduce(const Presentation& p, const IntVector& v);

bool elements_equal(const Presentation& p, const IntVector& v, const IntVector& w);

// Presentation of the kernel of the homomorphism induced by lambda on
// the group presented by p. lambda has one column per generator and must
// vanish on every relation; throws IllDefined otherwise.
Presentation kernel_presentation(const Presentation& p, const IntMatrix& lambda);

// Isomorphism type of the subgroup generated by the cosets of gens:
// W / R for W = lattice spanned by gens and the relations, R = relation
// lattice.
GroupInvariants subgroup_invariants(const Presentation& p, const std::vector<IntVector>& gens);

}  // namespace itg
