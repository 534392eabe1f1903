#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itg/tutte.hpp"

namespace itg {

struct VerifyOptions {
  std::uint64_t seed = 0;
  // Property suites enumerate exhaustively up to this many configurations
  // and fall back to seeded sampling beyond it.
  long exhaustive_limit = 10000;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  long configurations = 0;
  bool sampled = false;
  std::vector<std::string> failures;
};

struct VerifyReport {
  std::string matroid_name;
  GroupInvariants invariants;
  bool cross_method_ok = false;
  bool isomorphism_ok = false;
  std::string isomorphism_error;
  IsomorphismStats iso_stats;
  CheckResult bracket_identities;
  CheckResult quadruple_invariance;
  CheckResult triangle_invariance;
  CheckResult decomposition;

  bool passed() const {
    return cross_method_ok && isomorphism_ok && bracket_identities.passed &&
           quadruple_invariance.passed && triangle_invariance.passed && decomposition.passed;
  }
};

// Bracket identities, checked by reduction in the small presentation
// over all valid configurations (or a seeded sample): an equal pair
// collapses to the identity, swapping the pairs preserves the element,
// swapping within one pair inverts it.
CheckResult check_bracket_properties(const Matroid& m, const VerifyOptions& opts = {});

// The three-term bracket product over a quadruple of distinct circuits
// is invariant under all 24 orderings.
CheckResult check_quadruple_invariance(const Matroid& m, const VerifyOptions& opts = {});

// The three-term product over a triangle family is invariant under
// triangle permutations combined with the transversal swap
// (47)(58)(69).
CheckResult check_triangle_invariance(const Matroid& m, const VerifyOptions& opts = {});

// The Tutte subgroup of the extended presentation decomposes as the
// inner group times Z^(|E| - c_M).
CheckResult check_decomposition(const Matroid& m);

// Runs cross-method agreement, the isomorphism verification, the three
// appendix suites and the decomposition check.
VerifyReport run_full_verify(const Matroid& m, const VerifyOptions& opts = {});

}  // namespace itg
