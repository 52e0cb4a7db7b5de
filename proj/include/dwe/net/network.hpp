#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dwe/core/types.hpp"
#include "dwe/net/layers.hpp"

namespace dwe {

// A stage is one convolution+AMU layer, or several in parallel whose outputs
// are concatenated (the multi-scale stage).
struct StageSpec {
  std::vector<LayerSpec> branches;
};

struct NetworkSpec {
  int input_channels = 3;
  std::vector<StageSpec> stages;

  // The published architecture: 3x3/256, 5x5/128, 9x9/64, a parallel
  // {11,13,15,17}x8 stage, then 1x1/4, all with 4-piece amplitude maxout.
  // width_multiplier scales the hidden kernel counts (rounded to multiples of
  // the maxout pieces); the final layer stays at 4 kernels so the output is
  // always a single channel.
  static NetworkSpec standard(double width_multiplier = 1.0);
};

nlohmann::json to_json(const NetworkSpec& spec);
NetworkSpec network_spec_from_json(const nlohmann::json& j);

struct StageTrace {
  std::vector<std::vector<uint8_t>> selections;  // per branch
  ComplexTensor output;
};

struct ForwardTrace {
  std::vector<ComplexTensor> stage_inputs;
  std::vector<StageTrace> stages;
};

struct NetGrads {
  std::vector<LayerGrads> layers;  // stage-major, branch order
};

class ComplexNetwork {
 public:
  ComplexNetwork() = default;
  explicit ComplexNetwork(const NetworkSpec& spec);

  // Xavier-uniform init on real and imaginary parts, fans from the complex
  // channel counts; biases start at zero.
  void init_weights(uint64_t seed);

  ComplexTensor forward(const ComplexTensor& x) const;
  ComplexTensor forward(const ComplexTensor& x, ForwardTrace& trace) const;

  // Gradients of 0.5-free squared-error style losses: the caller provides the
  // output cotangent (d loss / d output, split-real convention).
  NetGrads backward(const ForwardTrace& trace, const ComplexTensor& grad_out) const;

  NetGrads zero_grads() const;
  void accumulate(NetGrads& into, const NetGrads& grads) const;

  const NetworkSpec& spec() const { return spec_; }
  std::vector<ConvLayer>& layers() { return layers_; }
  const std::vector<ConvLayer>& layers() const { return layers_; }

  int output_channels() const;
  size_t parameter_count() const;  // complex parameters, weights + biases

 private:
  NetworkSpec spec_;
  std::vector<ConvLayer> layers_;          // stage-major, branch order
  std::vector<std::pair<int, int>> plan_;  // [stage] -> (first layer index, branch count)
};

// Squared complex L2 norm of the residual, summed over pixels.
double loss(const ComplexTensor& prediction, const ComplexTensor& target);
// Same plus the output cotangent d loss / d prediction = 2 (prediction - target).
double loss_and_grad(const ComplexTensor& prediction, const ComplexTensor& target,
                     ComplexTensor& grad);

// Per-sample normalization scalar: max envelope of the compounded input stack.
double input_scale(const std::vector<IQImage>& inputs);

// CNN reconstruction of one frame from the beamformed per-transmit stack. The
// stack is normalized by its own input_scale and the output rescaled back.
IQImage reconstruct(const ComplexNetwork& net, const std::vector<IQImage>& inputs);

// Checkpoint container: 8-byte magic, uint32 header length, JSON header, then
// the float32 weight blob (layers in order, per layer the kernels then biases,
// interleaved real/imag).
void save_checkpoint(const std::string& path, const ComplexNetwork& net,
                     const nlohmann::json& meta);
ComplexNetwork load_checkpoint(const std::string& path, nlohmann::json* meta = nullptr);

}  // namespace dwe
