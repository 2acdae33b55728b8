#pragma once

// Group-construction mini-language for the CLI:
//   cyclic:n | dihedral:2n | quaternion:4n | product(expr,expr)
//   | sdp:<module-kind> | iterate(<module-kind>,depth) | file:<path>
// Parse errors carry the offending position.

#include <optional>
#include <stdexcept>
#include <string>

#include "fuchs/groups.hpp"

namespace fuchs::cli {

struct recipe_error : std::runtime_error {
  explicit recipe_error(const std::string& what) : std::runtime_error(what) {}
};

struct BuiltGroup {
  groups::GroupPtr group;
  /// Set when the outermost constructor is sdp:<kind>, enabling the
  /// action-aware ideal recipes.
  std::optional<groups::GroupAction> action;
  std::string recipe;
};

BuiltGroup parse_group_recipe(const std::string& text);

}  // namespace fuchs::cli
