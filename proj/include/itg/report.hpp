#pragma once

#include <string>
#include <vector>

#include "itg/matroid.hpp"

namespace itg {

// Published generator counts reproduced by `itg table`.
struct TableRow {
  std::string name;
  long expected_G;
  long expected_g;
};

const std::vector<TableRow>& expected_table();

struct TableResult {
  std::string name;
  long expected_G = 0, computed_G = 0;
  long expected_g = 0, computed_g = 0;
  bool catalog_valid = false;  // entry re-validated against the circuit axioms
  double seconds = 0;
  bool match() const { return expected_G == computed_G && expected_g == computed_g; }
};

// Computes all rows, one matroid per worker.
std::vector<TableResult> compute_table();

}  // namespace itg
