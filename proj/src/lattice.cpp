#include "itg/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace itg {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

SparseVec to_sparse(const IntRowVector& v) {
  SparseVec out;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) out.emplace_back(i, v(i));
  return out;
}

IntRowVector to_dense(const SparseVec& v, Index cols) {
  IntRowVector out = IntRowVector::Zero(cols);
  for (const auto& [i, c] : v) {
    if (i < 0 || i >= cols) throw DimensionMismatch("sparse index out of range");
    out(i) += c;
  }
  return out;
}

HermiteBasis::HermiteBasis(Index cols) : cols_(cols) {}

namespace {

Index leading_col(const IntRowVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return i;
  return -1;
}

bool exactly_zero(const IntRowVector& v) { return leading_col(v) < 0; }

bool exactly_zero(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

}  // namespace

void HermiteBasis::eliminate(IntRowVector& v) {
  for (;;) {
    Index c = leading_col(v);
    if (c < 0) return;
    auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), c);
    if (it == pivot_cols_.end() || *it != c) {
      // New pivot column; insert keeping rows sorted by pivot.
      if (v(c) < 0) v = -v;
      Index pos = static_cast<Index>(it - pivot_cols_.begin());
      pivot_cols_.insert(it, c);
      rows_.insert(rows_.begin() + pos, std::move(v));
      finalized_ = false;
      return;
    }
    Index pos = static_cast<Index>(it - pivot_cols_.begin());
    IntRowVector& r = rows_[pos];
    const Int a = r(c);
    const Int b = v(c);
    if (b % a == 0) {
      const Int q(b / a);
      v -= r * q;
    } else {
      // gcd step: replace the pivot row so that its pivot becomes
      // gcd(a, b), and clear column c of v.
      Int g, s, t;
      mpz_gcdext(g.backend().data(), s.backend().data(), t.backend().data(),
                 a.backend().data(), b.backend().data());
      IntRowVector combined = r * s + v * t;
      const Int va(a / g), vb(b / g);
      IntRowVector cleared = v * va - r * vb;
      r = std::move(combined);
      if (r(c) < 0) r = -r;
      v = std::move(cleared);
      finalized_ = false;
    }
  }
}

void HermiteBasis::add(IntRowVector row) {
  if (row.size() != cols_) throw DimensionMismatch("row length does not match basis columns");
  finalized_ = false;
  eliminate(row);
}

void HermiteBasis::add(const SparseVec& row) { add(to_dense(row, cols_)); }

void HermiteBasis::finalize() {
  // Left-to-right back-reduction: bring every entry above a pivot into
  // [0, pivot).
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Index c = pivot_cols_[i];
    const Int& p = rows_[i](c);
    for (std::size_t j = 0; j < i; ++j) {
      Int q = floor_div(rows_[j](c), p);
      if (q != 0) rows_[j] -= rows_[i] * q;
    }
  }
  finalized_ = true;
}

const std::vector<IntRowVector>& HermiteBasis::rows() const {
  if (!finalized_) throw std::logic_error("HermiteBasis used before finalize()");
  return rows_;
}

const std::vector<Index>& HermiteBasis::pivots() const { return pivot_cols_; }

IntMatrix HermiteBasis::matrix() const {
  if (!finalized_) throw std::logic_error("HermiteBasis used before finalize()");
  IntMatrix out(rank(), cols_);
  for (Index i = 0; i < rank(); ++i) out.row(i) = rows_[i];
  return out;
}

IntRowVector HermiteBasis::reduce(IntRowVector v) const {
  if (!finalized_) throw std::logic_error("HermiteBasis used before finalize()");
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match basis columns");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Index c = pivot_cols_[i];
    if (v(c) == 0) continue;
    Int q = floor_div(v(c), rows_[i](c));
    if (q != 0) v -= rows_[i] * q;
  }
  return v;
}

bool HermiteBasis::reduces_to_zero(const SparseVec& v) const {
  return exactly_zero(reduce(to_dense(v, cols_)));
}

std::optional<IntRowVector> HermiteBasis::express(IntRowVector v) const {
  if (!finalized_) throw std::logic_error("HermiteBasis used before finalize()");
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match basis columns");
  IntRowVector q = IntRowVector::Zero(rank());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Index c = pivot_cols_[i];
    if (v(c) == 0) continue;
    const Int& p = rows_[i](c);
    if (v(c) % p != 0) return std::nullopt;
    q(static_cast<Index>(i)) = v(c) / p;
    v -= rows_[i] * q(static_cast<Index>(i));
  }
  if (!exactly_zero(v)) return std::nullopt;
  return q;
}

IntMatrix hnf(const IntMatrix& m) {
  HermiteBasis basis(m.cols());
  for (Index i = 0; i < m.rows(); ++i) basis.add(IntRowVector(m.row(i)));
  basis.finalize();
  return basis.matrix();
}

std::vector<Int> snf(IntMatrix a) {
  const Index k = std::min(a.rows(), a.cols());
  std::vector<Int> diag(static_cast<std::size_t>(k), Int(0));
  Index t = 0;
  while (t < k) {
    // Minimal-absolute-value pivot in the trailing submatrix.
    Index pi = -1, pj = -1;
    Int best(0);
    for (Index i = t; i < a.rows(); ++i)
      for (Index j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        Int mag = abs(a(i, j));
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    a.row(t).swap(a.row(pi));
    a.col(t).swap(a.col(pj));

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        if (q != 0) a.row(i) -= a.row(t) * q;
        if (a(i, t) != 0) {
          a.row(t).swap(a.row(i));  // strictly smaller remainder becomes pivot
          clean = false;
        }
      }
      if (!clean) continue;
      for (Index j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        if (q != 0) a.col(j) -= a.col(t) * q;
        if (a(t, j) != 0) {
          a.col(t).swap(a.col(j));
          clean = false;
        }
      }
      if (!clean) continue;

      // Divisibility fix: the pivot must divide the trailing block.
      bool fixed = true;
      for (Index i = t + 1; i < a.rows() && fixed; ++i)
        for (Index j = t + 1; j < a.cols() && fixed; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.row(t) += a.row(i);
            fixed = false;
          }
      if (fixed) break;
    }
    diag[static_cast<std::size_t>(t)] = abs(a(t, t));
    ++t;
  }
  return diag;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  // Row-reduce m^T carrying the transform: zero rows of the echelon
  // correspond to transform rows spanning the kernel.
  const Index n = m.cols();
  IntMatrix a = m.transpose();
  IntMatrix u = IntMatrix::Identity(n, n);
  Index lead = 0;
  for (Index c = 0; c < a.cols() && lead < n; ++c) {
    Index pivot = -1;
    Int best(0);
    for (Index i = lead; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Int mag = abs(a(i, c));
      if (pivot < 0 || mag < best) {
        best = mag;
        pivot = i;
      }
    }
    if (pivot < 0) continue;
    a.row(lead).swap(a.row(pivot));
    u.row(lead).swap(u.row(pivot));
    for (;;) {
      bool clean = true;
      for (Index i = lead + 1; i < n; ++i) {
        if (a(i, c) == 0) continue;
        Int q = a(i, c) / a(lead, c);
        if (q != 0) {
          a.row(i) -= a.row(lead) * q;
          u.row(i) -= u.row(lead) * q;
        }
        if (a(i, c) != 0) {
          a.row(lead).swap(a.row(i));
          u.row(lead).swap(u.row(i));
          clean = false;
        }
      }
      if (clean) break;
    }
    ++lead;
  }
  HermiteBasis basis(n);
  for (Index i = lead; i < n; ++i) basis.add(IntRowVector(u.row(i)));
  basis.finalize();
  return basis.matrix();
}

std::string to_string(const GroupInvariants& g) {
  if (g.is_trivial()) return "1";
  std::ostringstream out;
  bool first = true;
  if (g.free_rank > 0) {
    out << (g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank));
    first = false;
  }
  for (const Int& d : g.torsion) {
    if (!first) out << " x ";
    out << "Z/" << d;
    first = false;
  }
  return out.str();
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix out = IntMatrix::Zero(static_cast<Index>(p.relations.size()), p.num_generators);
  for (std::size_t r = 0; r < p.relations.size(); ++r)
    for (const auto& [i, c] : p.relations[r]) out(static_cast<Index>(r), i) += c;
  return out;
}

RelationLattice::RelationLattice(const Presentation& p) : basis_(p.num_generators) {
  for (const SparseVec& r : p.relations) basis_.add(r);
  basis_.finalize();
}

IntVector RelationLattice::reduce(const IntVector& v) const {
  return basis_.reduce(v.transpose()).transpose();
}

GroupInvariants invariants(const Presentation& p) {
  HermiteBasis basis(p.num_generators);
  for (const SparseVec& r : p.relations) basis.add(r);
  basis.finalize();
  return invariants_of_basis(basis, p.num_generators);
}

GroupInvariants invariants_of_basis(const HermiteBasis& basis, Index num_generators) {
  // Unit pivots identify their generator with a word in the others and
  // their column is already clear elsewhere; only the non-unit rows need
  // a Smith pass.
  std::vector<Index> kept_rows;
  std::vector<bool> drop_col(static_cast<std::size_t>(num_generators), false);
  for (Index i = 0; i < basis.rank(); ++i) {
    if (basis.rows()[i](basis.pivots()[i]) == 1)
      drop_col[static_cast<std::size_t>(basis.pivots()[i])] = true;
    else
      kept_rows.push_back(i);
  }
  std::vector<Index> kept_cols;
  for (Index c = 0; c < num_generators; ++c)
    if (!drop_col[static_cast<std::size_t>(c)]) kept_cols.push_back(c);

  IntMatrix small(static_cast<Index>(kept_rows.size()), static_cast<Index>(kept_cols.size()));
  for (std::size_t i = 0; i < kept_rows.size(); ++i)
    for (std::size_t j = 0; j < kept_cols.size(); ++j)
      small(static_cast<Index>(i), static_cast<Index>(j)) =
          basis.rows()[kept_rows[i]](kept_cols[j]);

  GroupInvariants g;
  g.free_rank = num_generators - basis.rank();
  for (const Int& d : snf(std::move(small)))
    if (d > 1) g.torsion.push_back(d);
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

IntVector reduce(const Presentation& p, const IntVector& v) {
  return RelationLattice(p).reduce(v);
}

bool elements_equal(const Presentation& p, const IntVector& v, const IntVector& w) {
  RelationLattice lat(p);
  IntVector rv = lat.reduce(v);
  IntVector rw = lat.reduce(w);
  for (Index i = 0; i < rv.size(); ++i)
    if (rv(i) != rw(i)) return false;
  return true;
}

Presentation kernel_presentation(const Presentation& p, const IntMatrix& lambda) {
  if (lambda.cols() != p.num_generators)
    throw DimensionMismatch("lambda must have one column per generator");

  for (const SparseVec& r : p.relations) {
    IntVector image = IntVector::Zero(lambda.rows());
    for (const auto& [i, c] : r) image += lambda.col(i) * c;
    if (!exactly_zero(image))
      throw IllDefined("a relation maps outside zero; the homomorphism is not well defined");
  }

  const IntMatrix kernel = kernel_basis(lambda);
  HermiteBasis basis(p.num_generators);
  for (Index i = 0; i < kernel.rows(); ++i) basis.add(IntRowVector(kernel.row(i)));
  basis.finalize();

  Presentation out;
  out.num_generators = basis.rank();
  for (Index i = 0; i < basis.rank(); ++i) out.labels.push_back(basis_symbol(static_cast<int>(i)));
  for (const SparseVec& r : p.relations) {
    auto coords = basis.express(to_dense(r, p.num_generators));
    if (!coords) throw IllDefined("relation lies outside the kernel lattice");
    out.relations.push_back(to_sparse(*coords));
  }
  return out;
}

GroupInvariants subgroup_invariants(const Presentation& p, const std::vector<IntVector>& gens) {
  HermiteBasis w(p.num_generators);
  for (const IntVector& g : gens) {
    if (g.size() != p.num_generators)
      throw DimensionMismatch("subgroup generator length does not match presentation");
    w.add(IntRowVector(g.transpose()));
  }
  for (const SparseVec& r : p.relations) w.add(r);
  w.finalize();

  Presentation quotient;
  quotient.num_generators = w.rank();
  for (const SparseVec& r : p.relations) {
    auto coords = w.express(to_dense(r, p.num_generators));
    if (!coords) throw IllDefined("relation lies outside the subgroup lattice");
    quotient.relations.push_back(to_sparse(*coords));
  }
  return invariants(quotient);
}

}  // namespace itg
