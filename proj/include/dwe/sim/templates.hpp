#pragma once

#include <cstdint>

#include "dwe/core/mat.hpp"

namespace dwe {

// Procedural grayscale template: smooth textured background, a few dark
// chamber-like pools and bright band structures. Deterministic per seed.
Mat<uint8_t> make_synthetic_template(int rows, int cols, uint64_t seed);

}  // namespace dwe
