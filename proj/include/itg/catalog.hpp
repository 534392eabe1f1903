#pragma once

#include <string>
#include <vector>

#include "itg/matroid.hpp"

namespace itg {

struct UnknownName : MatroidError {
  using MatroidError::MatroidError;
};

// The fourteen named matroids, in table order:
// U_2(4), U_2(5), U_3(5), M(K4), W3, Q6, P6, U_3(6), R6,
// F7, F7*, F7-, (F7-)*, P7.
const std::vector<std::string>& catalog_names();

// Returns the named matroid; throws UnknownName otherwise.
Matroid catalog_get(const std::string& name);

bool catalog_has(const std::string& name);

}  // namespace itg
