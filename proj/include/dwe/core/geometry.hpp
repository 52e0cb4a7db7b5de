#pragma once

#include <vector>

#include "dwe/core/types.hpp"

namespace dwe {

// Polar node -> Cartesian position, array centre at the origin, z into the
// medium. Fractional indices are accepted so displacements can be mapped too.
Vec2 grid_to_cartesian(const ScanGrid& grid, double i, double j);

// Integer-node overload with range checking.
Vec2 grid_to_cartesian(const ScanGrid& grid, int i, int j);

// Inverse mapping; returns fractional (i, j). Positions outside the sector
// yield indices outside [0, n-1].
void cartesian_to_grid(const ScanGrid& grid, Vec2 p, double& i, double& j);

// n angles linearly spaced over [-half_span, +half_span]; n = 1 yields {0}.
std::vector<double> make_evenly_spaced_angles(int n, double half_span);

}  // namespace dwe
