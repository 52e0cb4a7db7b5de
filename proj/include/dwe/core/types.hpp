#pragma once

#include <vector>

#include "dwe/core/mat.hpp"

namespace dwe {

struct Vec2 {
  double x = 0.0;  // [m] lateral, along the array
  double z = 0.0;  // [m] axial, into the medium
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.z + b.z}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.z - b.z}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.z}; }

// Phased-array probe. Defaults follow an ATL P4-2 style 64-element array.
struct ProbeConfig {
  int element_count = 64;
  double pitch = 0.3e-3;             // [m]
  double kerf = 50e-6;               // [m]
  double center_frequency = 3e6;     // [Hz]
  double bandwidth_low = 2e6;        // [Hz]
  double bandwidth_high = 4e6;       // [Hz]
  double sampling_frequency = 12e6;  // [Hz]
  double sound_speed = 1540.0;       // [m/s]

  double wavelength() const { return sound_speed / center_frequency; }
  double aperture() const { return (element_count - 1) * pitch; }
  // Lateral position of element e; the array is centred on x = 0 at z = 0.
  double element_x(int e) const { return (e - 0.5 * (element_count - 1)) * pitch; }
};

void validate(const ProbeConfig& p);

enum class TransmitMode { frozen_time, dynamic };

struct TransmitScheme {
  std::vector<double> angles;  // [rad] steering tilt per transmit
  double prf = 3850.0;         // [Hz]
  TransmitMode mode = TransmitMode::dynamic;

  double inter_transmit_dt() const { return 1.0 / prf; }
};

void validate(const TransmitScheme& s);

// Polar sector sampling grid for beamformed images. Node (i, j) sits at
// depth_min + i*depth_step, angle_min + j*angle_step.
struct ScanGrid {
  double depth_min = 0.01;   // [m]
  double depth_max = 0.10;   // [m]
  double angle_min = -0.7853981633974483;  // [rad]
  double angle_max = 0.7853981633974483;   // [rad]
  int n_depth = 352;
  int n_angle = 352;

  double depth_step() const { return (depth_max - depth_min) / (n_depth - 1); }
  double angle_step() const { return (angle_max - angle_min) / (n_angle - 1); }
  // [m^2] area of the sector covered by the grid
  double sector_area() const {
    return 0.5 * (angle_max - angle_min) * (depth_max * depth_max - depth_min * depth_min);
  }
  bool operator==(const ScanGrid& o) const = default;
};

void validate(const ScanGrid& g);

// Default experiment grid: 0.01-0.10 m, +/-45 deg, radial step lambda/2.
ScanGrid default_grid(const ProbeConfig& probe);

// Complex beamformed or reconstructed image on a scan grid.
struct IQImage {
  ScanGrid grid;
  CMat samples;          // n_depth x n_angle
  double frame_time = 0.0;  // [s]
};

void validate(const IQImage& img);

// Sparse displacement measurements, e.g. one vector per tracking window.
struct MotionField {
  std::vector<Vec2> points;   // [m] measurement positions (Cartesian)
  std::vector<Vec2> vectors;  // [m] displacement over interframe_dt
  std::vector<uint8_t> mask;  // 1 = valid
  double interframe_dt = 0.0; // [s]
};

void validate(const MotionField& f);

}  // namespace dwe
