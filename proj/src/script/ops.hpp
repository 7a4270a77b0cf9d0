#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "geo/relations.hpp"

namespace geo::script::detail {

struct OpSig {
  const char* name;
  std::size_t args;
  std::size_t outs;
};

// The constructions callable from a script.
inline const OpSig* op_sig(std::string_view name) {
  static constexpr OpSig kOps[] = {
      {"midpoint", 2, 1},          {"extend", 4, 1},
      {"straightedge_compass", 4, 1}, {"compass_compass", 6, 1},
      {"plane_separation", 4, 1},  {"outer_pasch", 5, 1},
      {"parallelogram_fourth", 3, 1}, {"bisector_foot", 3, 1},
  };
  for (const OpSig& op : kOps)
    if (name == op.name) return &op;
  return nullptr;
}

// Argument count of an assertable relation, including the angle relations.
inline std::optional<std::size_t> assert_arity(std::string_view name) {
  if (auto k = relation_from_name(name)) return relation_arity(*k);
  if (name == "angle_cong" || name == "angle_lt") return 6;
  if (name == "angle_sum") return 9;
  return std::nullopt;
}

}  // namespace geo::script::detail
