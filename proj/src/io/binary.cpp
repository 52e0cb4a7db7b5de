#include "dwe/io/binary.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dwe {

void write_f32(const std::string& path, const std::vector<float>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size() * sizeof(float)));
  if (!out) throw std::runtime_error("short write: " + path);
}

std::vector<float> read_f32(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw std::runtime_error("cannot open: " + path);
  const auto bytes = static_cast<size_t>(in.tellg());
  if (bytes % sizeof(float) != 0) throw std::runtime_error("truncated float32 file: " + path);
  std::vector<float> data(bytes / sizeof(float));
  in.seekg(0);
  in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(bytes));
  if (!in) throw std::runtime_error("short read: " + path);
  return data;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void save_iq_image(const std::string& base, const IQImage& img) {
  validate(img);
  std::vector<float> buf;
  buf.reserve(img.samples.size() * 2);
  for (const auto& z : img.samples.v) {
    buf.push_back(static_cast<float>(z.real()));
    buf.push_back(static_cast<float>(z.imag()));
  }
  write_f32(base + ".bin", buf);
  nlohmann::json side{{"dtype", "complex64"},
                      {"layout", "interleaved"},
                      {"byte_order", "little"},
                      {"shape", {img.samples.rows, img.samples.cols}},
                      {"grid", to_json(img.grid)},
                      {"frame_time", img.frame_time}};
  write_json_file(base + ".json", side);
}

IQImage load_iq_image(const std::string& base) {
  const auto side = read_json_file(base + ".json");
  IQImage img;
  img.grid = grid_from_json(side.at("grid"));
  img.frame_time = side.at("frame_time").get<double>();
  const int rows = side.at("shape").at(0).get<int>();
  const int cols = side.at("shape").at(1).get<int>();
  const auto buf = read_f32(base + ".bin");
  if (buf.size() != static_cast<size_t>(rows) * cols * 2) {
    throw std::runtime_error("iq image size mismatch: " + base);
  }
  img.samples = CMat(rows, cols);
  for (size_t k = 0; k < img.samples.size(); ++k) {
    img.samples.v[k] = {static_cast<double>(buf[2 * k]), static_cast<double>(buf[2 * k + 1])};
  }
  validate(img);
  return img;
}

void save_motion_field(const std::string& base, const MotionField& field) {
  validate(field);
  const size_t n = field.points.size();
  std::vector<float> buf;
  buf.reserve(5 * n);
  for (const auto& p : field.points) {
    buf.push_back(static_cast<float>(p.x));
    buf.push_back(static_cast<float>(p.z));
  }
  for (const auto& v : field.vectors) {
    buf.push_back(static_cast<float>(v.x));
    buf.push_back(static_cast<float>(v.z));
  }
  for (uint8_t m : field.mask) buf.push_back(m ? 1.0f : 0.0f);
  write_f32(base + ".bin", buf);
  nlohmann::json side{{"dtype", "float32"},
                      {"byte_order", "little"},
                      {"sections", {"points", "vectors", "mask"}},
                      {"count", n},
                      {"interframe_dt", field.interframe_dt}};
  write_json_file(base + ".json", side);
}

MotionField load_motion_field(const std::string& base) {
  const auto side = read_json_file(base + ".json");
  const size_t n = side.at("count").get<size_t>();
  const auto buf = read_f32(base + ".bin");
  if (buf.size() != 5 * n) throw std::runtime_error("motion field size mismatch: " + base);
  MotionField f;
  f.interframe_dt = side.at("interframe_dt").get<double>();
  f.points.resize(n);
  f.vectors.resize(n);
  f.mask.resize(n);
  for (size_t k = 0; k < n; ++k) f.points[k] = {buf[2 * k], buf[2 * k + 1]};
  for (size_t k = 0; k < n; ++k) f.vectors[k] = {buf[2 * n + 2 * k], buf[2 * n + 2 * k + 1]};
  for (size_t k = 0; k < n; ++k) f.mask[k] = buf[4 * n + k] != 0.0f;
  validate(f);
  return f;
}

void save_motion_field_csv(const std::string& path, const MotionField& field) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "x_m,z_m,dx_m,dz_m,valid\n";
  char line[160];
  for (size_t k = 0; k < field.points.size(); ++k) {
    std::snprintf(line, sizeof(line), "%.9g,%.9g,%.9g,%.9g,%d\n", field.points[k].x,
                  field.points[k].z, field.vectors[k].x, field.vectors[k].z,
                  field.mask[k] ? 1 : 0);
    out << line;
  }
}

nlohmann::json to_json(const ProbeConfig& p) {
  return {{"element_count", p.element_count},
          {"pitch", p.pitch},
          {"kerf", p.kerf},
          {"center_frequency", p.center_frequency},
          {"bandwidth", {p.bandwidth_low, p.bandwidth_high}},
          {"sampling_frequency", p.sampling_frequency},
          {"sound_speed", p.sound_speed}};
}

ProbeConfig probe_from_json(const nlohmann::json& j) {
  ProbeConfig p;
  p.element_count = j.value("element_count", p.element_count);
  p.pitch = j.value("pitch", p.pitch);
  p.kerf = j.value("kerf", p.kerf);
  p.center_frequency = j.value("center_frequency", p.center_frequency);
  if (j.contains("bandwidth")) {
    p.bandwidth_low = j.at("bandwidth").at(0).get<double>();
    p.bandwidth_high = j.at("bandwidth").at(1).get<double>();
  }
  p.sampling_frequency = j.value("sampling_frequency", p.sampling_frequency);
  p.sound_speed = j.value("sound_speed", p.sound_speed);
  validate(p);
  return p;
}

nlohmann::json to_json(const ScanGrid& g) {
  return {{"depth_range", {g.depth_min, g.depth_max}},
          {"angle_range", {g.angle_min, g.angle_max}},
          {"n_depth", g.n_depth},
          {"n_angle", g.n_angle},
          {"geometry", "polar_sector"}};
}

ScanGrid grid_from_json(const nlohmann::json& j) {
  ScanGrid g;
  if (j.contains("depth_range")) {
    g.depth_min = j.at("depth_range").at(0).get<double>();
    g.depth_max = j.at("depth_range").at(1).get<double>();
  }
  if (j.contains("angle_range")) {
    g.angle_min = j.at("angle_range").at(0).get<double>();
    g.angle_max = j.at("angle_range").at(1).get<double>();
  }
  g.n_depth = j.value("n_depth", g.n_depth);
  g.n_angle = j.value("n_angle", g.n_angle);
  validate(g);
  return g;
}

nlohmann::json to_json(const TransmitScheme& s) {
  return {{"angles", s.angles},
          {"prf", s.prf},
          {"mode", s.mode == TransmitMode::frozen_time ? "frozen_time" : "dynamic"}};
}

TransmitScheme scheme_from_json(const nlohmann::json& j) {
  TransmitScheme s;
  s.angles = j.at("angles").get<std::vector<double>>();
  s.prf = j.value("prf", s.prf);
  const std::string mode = j.value("mode", "dynamic");
  if (mode == "frozen_time") {
    s.mode = TransmitMode::frozen_time;
  } else if (mode == "dynamic") {
    s.mode = TransmitMode::dynamic;
  } else {
    throw std::invalid_argument("scheme: unknown mode '" + mode + "'");
  }
  validate(s);
  return s;
}

std::string config_hash(const nlohmann::json& j) {
  const std::string dump = j.dump();
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dwe
