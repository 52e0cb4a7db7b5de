#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dwe/core/types.hpp"
#include "dwe/eval/metrics.hpp"

namespace dwe {

// Geometric region primitive in Cartesian metres.
struct RegionPrimitive {
  enum class Shape { disk, annulus };
  Shape shape = Shape::disk;
  Vec2 center{};
  double radius = 0.0;   // disk
  double r_inner = 0.0;  // annulus
  double r_outer = 0.0;
};

// A region is include-primitives minus exclude-primitives, or an explicit
// pixel list.
struct RegionSpec {
  std::vector<RegionPrimitive> include;
  std::vector<RegionPrimitive> exclude;
  std::vector<std::pair<int, int>> pixels;  // explicit (i, j) list
};

Mat<uint8_t> resolve_mask(const RegionSpec& spec, const ScanGrid& grid);

// Resolves {"cyst": ..., "background": ...} into validated masks.
RegionMasks resolve_regions(const nlohmann::json& j, const ScanGrid& grid);

RegionSpec region_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RegionSpec& spec);

}  // namespace dwe
