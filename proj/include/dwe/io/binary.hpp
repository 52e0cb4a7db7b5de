#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dwe/core/types.hpp"

namespace dwe {

// All array files are raw little-endian float32; complex data is interleaved
// real/imag. Dimensions travel in a JSON sidecar (same path, .json suffix).

void write_f32(const std::string& path, const std::vector<float>& data);
std::vector<float> read_f32(const std::string& path);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

// IQImage container: <base>.bin + <base>.json
void save_iq_image(const std::string& base, const IQImage& img);
IQImage load_iq_image(const std::string& base);

// MotionField container: points, vectors, mask concatenated in one blob.
void save_motion_field(const std::string& base, const MotionField& field);
MotionField load_motion_field(const std::string& base);

// CSV export of per-window diagnostics (x, z, dx, dz, valid).
void save_motion_field_csv(const std::string& path, const MotionField& field);

// JSON conversions for the shared domain types.
nlohmann::json to_json(const ProbeConfig& p);
ProbeConfig probe_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ScanGrid& g);
ScanGrid grid_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TransmitScheme& s);
TransmitScheme scheme_from_json(const nlohmann::json& j);

// FNV-1a hash of the canonical (sorted-key) JSON dump, as fixed-width hex.
std::string config_hash(const nlohmann::json& j);

}  // namespace dwe
