#include "dwe/eval/regions.hpp"

#include <cmath>
#include <stdexcept>

#include "dwe/core/geometry.hpp"

namespace dwe {

namespace {

bool contains(const RegionPrimitive& prim, Vec2 p) {
  const double d = std::hypot(p.x - prim.center.x, p.z - prim.center.z);
  switch (prim.shape) {
    case RegionPrimitive::Shape::disk:
      return d <= prim.radius;
    case RegionPrimitive::Shape::annulus:
      return d >= prim.r_inner && d <= prim.r_outer;
  }
  return false;
}

RegionPrimitive primitive_from_json(const nlohmann::json& j) {
  RegionPrimitive prim;
  const std::string type = j.at("type").get<std::string>();
  prim.center = {j.at("center").at(0).get<double>(), j.at("center").at(1).get<double>()};
  if (type == "disk") {
    prim.shape = RegionPrimitive::Shape::disk;
    prim.radius = j.at("radius").get<double>();
  } else if (type == "annulus") {
    prim.shape = RegionPrimitive::Shape::annulus;
    prim.r_inner = j.at("r_inner").get<double>();
    prim.r_outer = j.at("r_outer").get<double>();
  } else {
    throw std::invalid_argument("region: unknown primitive type '" + type + "'");
  }
  return prim;
}

nlohmann::json primitive_to_json(const RegionPrimitive& prim) {
  if (prim.shape == RegionPrimitive::Shape::disk) {
    return {{"type", "disk"}, {"center", {prim.center.x, prim.center.z}}, {"radius", prim.radius}};
  }
  return {{"type", "annulus"},
          {"center", {prim.center.x, prim.center.z}},
          {"r_inner", prim.r_inner},
          {"r_outer", prim.r_outer}};
}

}  // namespace

Mat<uint8_t> resolve_mask(const RegionSpec& spec, const ScanGrid& grid) {
  Mat<uint8_t> mask(grid.n_depth, grid.n_angle, 0);
  for (const auto& px : spec.pixels) {
    if (px.first < 0 || px.first >= grid.n_depth || px.second < 0 || px.second >= grid.n_angle) {
      throw std::invalid_argument("region: explicit pixel outside the grid");
    }
    mask(px.first, px.second) = 1;
  }
  if (spec.include.empty() && spec.pixels.empty()) {
    throw std::invalid_argument("region: empty specification");
  }
  for (int i = 0; i < grid.n_depth; ++i) {
    for (int j = 0; j < grid.n_angle; ++j) {
      const Vec2 p = grid_to_cartesian(grid, i, j);
      bool in = mask(i, j) != 0;
      if (!in) {
        for (const auto& prim : spec.include) {
          if (contains(prim, p)) {
            in = true;
            break;
          }
        }
      }
      if (in) {
        for (const auto& prim : spec.exclude) {
          if (contains(prim, p)) {
            in = false;
            break;
          }
        }
      }
      mask(i, j) = in ? 1 : 0;
    }
  }
  return mask;
}

RegionSpec region_spec_from_json(const nlohmann::json& j) {
  RegionSpec spec;
  if (j.contains("include")) {
    for (const auto& p : j.at("include")) spec.include.push_back(primitive_from_json(p));
  }
  if (j.contains("exclude")) {
    for (const auto& p : j.at("exclude")) spec.exclude.push_back(primitive_from_json(p));
  }
  if (j.contains("pixels")) {
    for (const auto& px : j.at("pixels")) {
      spec.pixels.emplace_back(px.at(0).get<int>(), px.at(1).get<int>());
    }
  }
  return spec;
}

nlohmann::json to_json(const RegionSpec& spec) {
  nlohmann::json j;
  for (const auto& p : spec.include) j["include"].push_back(primitive_to_json(p));
  for (const auto& p : spec.exclude) j["exclude"].push_back(primitive_to_json(p));
  for (const auto& px : spec.pixels) j["pixels"].push_back({px.first, px.second});
  return j;
}

RegionMasks resolve_regions(const nlohmann::json& j, const ScanGrid& grid) {
  RegionMasks masks;
  masks.cyst = resolve_mask(region_spec_from_json(j.at("cyst")), grid);
  masks.background = resolve_mask(region_spec_from_json(j.at("background")), grid);
  validate(masks);
  return masks;
}

}  // namespace dwe
