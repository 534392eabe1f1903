#include "itg/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>

namespace itg {

namespace {

bool vec_equal(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool vec_zero(const IntVector& a) {
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != 0) return false;
  return true;
}

std::string tuple_str(int a, int b, int c, int d) {
  std::ostringstream out;
  out << "(" << a << "," << b << "|" << c << "," << d << ")";
  return out.str();
}

// Sparse vector of a normalized bracket over the small presentation.
SparseVec bracket_vec(const CircuitOrder& order,
                      const std::unordered_map<std::uint64_t, Index>& paren_index, int a, int b,
                      int c, int d) {
  const SignedSymbol s = bracket_normalize(order, a, b, c, d);
  if (s.is_identity) return {};
  return {{paren_index.at(pack_quad(s.symbol.a, s.symbol.b, s.symbol.c, s.symbol.d)),
           Int(s.sign)}};
}

struct SmallGroup {
  CircuitOrder order;
  Presentation p;
  RelationLattice lattice;
  std::unordered_map<std::uint64_t, Index> paren_index;

  explicit SmallGroup(const Matroid& m)
      : order(CircuitOrder::canonical(m)),
        p(build_tmi0(m, order)),
        lattice(p) {
    for (Index i = 0; i < p.num_generators; ++i) {
      const GeneratorSymbol& s = p.labels[static_cast<std::size_t>(i)];
      if (s.kind != GeneratorSymbol::Kind::quad_paren) continue;
      paren_index.emplace(pack_quad(s.a, s.b, s.c, s.d), i);
    }
  }

  SparseVec bracket(int a, int b, int c, int d) const {
    return bracket_vec(order, paren_index, a, b, c, d);
  }

  IntVector reduce_sparse(const SparseVec& v) const {
    return lattice.reduce(to_dense(v, p.num_generators).transpose());
  }
};

SparseVec sparse_sum(std::initializer_list<SparseVec> vs) {
  std::map<Index, Int> acc;
  for (const SparseVec& v : vs)
    for (const auto& [i, c] : v) acc[i] += c;
  SparseVec out;
  for (auto& [i, c] : acc)
    if (c != 0) out.emplace_back(i, c);
  return out;
}

template <typename T>
std::vector<T> sample_or_all(std::vector<T> xs, long budget, std::uint64_t seed, bool* sampled) {
  *sampled = false;
  if (static_cast<long>(xs.size()) <= budget) return xs;
  *sampled = true;
  std::mt19937_64 rng(seed);
  std::shuffle(xs.begin(), xs.end(), rng);
  xs.resize(static_cast<std::size_t>(budget));
  return xs;
}

}  // namespace

CheckResult check_bracket_properties(const Matroid& m, const VerifyOptions& opts) {
  CheckResult result{"bracket-identities"};
  SmallGroup group(m);
  const int k = group.order.count();
  const auto& c = group.order.circuits();

  std::vector<std::array<int, 4>> configs;
  for (int d1 = 0; d1 < k; ++d1)
    for (int d2 = 0; d2 < k; ++d2)
      for (int d3 = 0; d3 < k; ++d3) {
        if (d3 == d1 || d3 == d2) continue;
        for (int d4 = 0; d4 < k; ++d4) {
          if (d4 == d1 || d4 == d2) continue;
          if (group.order.dim_of(c[d1] | c[d2] | c[d3] | c[d4]) != 1) continue;
          configs.push_back({d1, d2, d3, d4});
        }
      }
  configs = sample_or_all(std::move(configs), opts.exhaustive_limit, opts.seed, &result.sampled);

  for (const auto& t : configs) {
    const auto [d1, d2, d3, d4] = t;
    // An equal second pair collapses to the identity.
    if (d3 == d4 &&
        !vec_zero(group.reduce_sparse(group.bracket(d1, d2, d3, d4)))) {
      result.passed = false;
      result.failures.push_back("equal-pair collapse fails at " + tuple_str(d1, d2, d3, d4));
    }
    // Swapping the pairs preserves the element.
    IntVector lhs = group.reduce_sparse(group.bracket(d1, d2, d3, d4));
    IntVector rhs = group.reduce_sparse(group.bracket(d3, d4, d1, d2));
    if (!vec_equal(lhs, rhs)) {
      result.passed = false;
      result.failures.push_back("pair-swap identity fails at " + tuple_str(d1, d2, d3, d4));
    }
    // Swapping within the second pair inverts the element.
    if (!vec_zero(group.reduce_sparse(
            sparse_sum({group.bracket(d1, d2, d3, d4), group.bracket(d1, d2, d4, d3)})))) {
      result.passed = false;
      result.failures.push_back("inversion identity fails at " + tuple_str(d1, d2, d3, d4));
    }
    result.configurations++;
    if (result.failures.size() > 8) return result;
  }
  return result;
}

CheckResult check_quadruple_invariance(const Matroid& m, const VerifyOptions& opts) {
  CheckResult result{"quadruple-permutation-invariance"};
  SmallGroup group(m);

  std::vector<std::array<int, 4>> quadruples = line_quadruples(group.order);
  const long budget = std::max<long>(1, opts.exhaustive_limit / 24);
  quadruples = sample_or_all(std::move(quadruples), budget, opts.seed, &result.sampled);

  std::array<int, 4> perm{};
  for (const auto& q : quadruples) {
    std::optional<IntVector> reference;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const int u0 = q[perm[0]], u1 = q[perm[1]], u2 = q[perm[2]], u3 = q[perm[3]];
      const SparseVec product =
          sparse_sum({group.bracket(u0, u1, u2, u3), group.bracket(u0, u3, u1, u2),
                      group.bracket(u0, u2, u3, u1)});
      IntVector reduced = group.reduce_sparse(product);
      if (!reference) {
        reference = std::move(reduced);
      } else if (!vec_equal(reduced, *reference)) {
        result.passed = false;
        result.failures.push_back("quadruple product differs at {" + std::to_string(q[0]) +
                                  "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
                                  std::to_string(q[3]) + "} under ordering " +
                                  tuple_str(u0, u1, u2, u3));
      }
      result.configurations++;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (result.failures.size() > 8) return result;
  }
  return result;
}

CheckResult check_triangle_invariance(const Matroid& m, const VerifyOptions& opts) {
  CheckResult result{"triangle-family-invariance"};
  SmallGroup group(m);

  std::vector<TriangleFamily> families = s5_families(m, group.order);
  const long budget = std::max<long>(1, opts.exhaustive_limit / 12);
  families = sample_or_all(std::move(families), budget, opts.seed, &result.sampled);

  // All permutations of the triangle positions, each with and without
  // the transversal swap nu = (47)(58)(69). Each product term pairs the
  // two permuted triangle circuits on a line with the transversals of
  // that same line, in the order the swap dictates.
  std::array<int, 3> pi{};
  for (const TriangleFamily& f : families) {
    std::optional<IntVector> reference;
    std::iota(pi.begin(), pi.end(), 0);
    do {
      for (int swap = 0; swap < 2; ++swap) {
        std::array<SparseVec, 3> terms;
        for (int i = 0; i < 3; ++i) {
          const int first = f.idx[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])];
          const int second =
              f.idx[static_cast<std::size_t>(pi[static_cast<std::size_t>((i + 1) % 3)])];
          const int line = pi[static_cast<std::size_t>((i + 2) % 3)];
          const int t1 = f.idx[static_cast<std::size_t>(line + 3 + 3 * swap)];
          const int t2 = f.idx[static_cast<std::size_t>(line + 6 - 3 * swap)];
          terms[static_cast<std::size_t>(i)] = group.bracket(first, second, t1, t2);
        }
        const SparseVec product = sparse_sum({terms[0], terms[1], terms[2]});
        IntVector reduced = group.reduce_sparse(product);
        if (!reference) {
          reference = std::move(reduced);
        } else if (!vec_equal(reduced, *reference)) {
          result.passed = false;
          std::ostringstream what;
          what << "triangle product differs for family (";
          for (int i = 0; i < 9; ++i) what << (i ? "," : "") << f.idx[static_cast<std::size_t>(i)];
          what << ") under pi=(" << pi[0] << pi[1] << pi[2] << ") swap=" << swap;
          result.failures.push_back(what.str());
        }
        result.configurations++;
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
    if (result.failures.size() > 8) return result;
  }
  return result;
}

CheckResult check_decomposition(const Matroid& m) {
  CheckResult result{"tutte-subgroup-decomposition"};
  auto [ext, lambda] = build_extended(m);
  const GroupInvariants inner = invariants(kernel_presentation(ext, lambda));
  const GroupInvariants subgroup = subgroup_invariants(ext, tutte_subgroup_generators(ext));
  const Index expected_free =
      inner.free_rank + m.ground_size() - connected_component_count(m);
  result.configurations = 1;
  if (subgroup.free_rank != expected_free || subgroup.torsion != inner.torsion) {
    result.passed = false;
    result.failures.push_back("subgroup " + to_string(subgroup) + " != inner " +
                              to_string(inner) + " x Z^" +
                              std::to_string(m.ground_size() - connected_component_count(m)));
  }
  return result;
}

VerifyReport run_full_verify(const Matroid& m, const VerifyOptions& opts) {
  VerifyReport report;
  report.matroid_name = m.name();
  try {
    report.iso_stats = verify_isomorphism(m);
    report.isomorphism_ok = true;
    report.cross_method_ok = true;  // invariant agreement is part of the check
    report.invariants = report.iso_stats.invariants;
  } catch (const VerificationFailure& e) {
    report.isomorphism_error = e.what();
  }
  report.bracket_identities = check_bracket_properties(m, opts);
  report.quadruple_invariance = check_quadruple_invariance(m, opts);
  report.triangle_invariance = check_triangle_invariance(m, opts);
  report.decomposition = check_decomposition(m);
  return report;
}

}  // namespace itg
