#pragma once

#include <string>

#include <json.hpp>

#include "itg/matroid.hpp"

namespace itg {

struct ParseError : MatroidError {
  using MatroidError::MatroidError;
};

// Matroid document:
//   {"name": optional string,
//    "ground_set": n or [labels...],
//    "circuits": [[indices-or-labels...]...]}   (or "bases" instead)
// Exactly one of circuits/bases is required; labels resolve to indices
// by position in ground_set.
Matroid matroid_from_json(const nlohmann::json& doc);

nlohmann::ordered_json matroid_to_json(const Matroid& m);

// Accepts a file path or a catalog:NAME URI.
Matroid load_matroid(const std::string& source);

}  // namespace itg
