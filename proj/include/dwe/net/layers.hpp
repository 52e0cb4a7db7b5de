#pragma once

#include <cstdint>
#include <vector>

#include "dwe/net/tensor.hpp"

namespace dwe {

struct LayerSpec {
  int kernel_size = 3;   // odd, 'same' zero padding
  int kernel_count = 4;  // pre-maxout feature maps
  int maxout_pieces = 4;

  int out_channels() const { return kernel_count / maxout_pieces; }
};

void validate(const LayerSpec& spec, int input_channels);

// One complex convolution layer followed by an amplitude maxout unit.
// Weight layout: [kernel][in_ch][ky][kx].
struct ConvLayer {
  LayerSpec spec;
  int in_ch = 0;
  std::vector<double> w_re, w_im;
  std::vector<double> b_re, b_im;

  size_t weights_per_kernel() const {
    return static_cast<size_t>(in_ch) * spec.kernel_size * spec.kernel_size;
  }
  size_t weight_count() const { return static_cast<size_t>(spec.kernel_count) * weights_per_kernel(); }
  // complex-valued parameters, weights plus biases
  size_t parameter_count() const { return weight_count() + spec.kernel_count; }
};

ConvLayer make_layer(const LayerSpec& spec, int input_channels);

struct LayerGrads {
  std::vector<double> w_re, w_im, b_re, b_im;
};

LayerGrads make_grads(const ConvLayer& layer);

// Full complex multiply-accumulate cross-correlation plus bias, zero-padded to
// the input size. Output has spec.kernel_count channels (pre-maxout).
ComplexTensor complex_conv2d(const ConvLayer& layer, const ComplexTensor& input);

// Element-wise max-modulus selection across equally shaped branches; ties go
// to the lowest branch index.
ComplexTensor amu(const std::vector<ComplexTensor>& branches);

// Maxout across groups of `pieces` consecutive channels; records the selected
// kernel index per output element when `selection` is non-null.
ComplexTensor amu_group(const ComplexTensor& pre, int pieces, std::vector<uint8_t>* selection);

// Gradient routing of amu_group: scatters the output cotangent back to the
// selected pre-activation channels.
ComplexTensor amu_group_backward(const ComplexTensor& grad_out, int pieces,
                                 const std::vector<uint8_t>& selection, int pre_channels);

// Backward pass of complex_conv2d under the split-real convention. grad_out is
// d(loss)/d(output) stored as a complex tensor (re = d/dRe, im = d/dIm).
// Accumulates weight/bias gradients and, when grad_in is non-null, writes the
// input cotangent.
void complex_conv2d_backward(const ConvLayer& layer, const ComplexTensor& input,
                             const ComplexTensor& grad_out, LayerGrads& grads,
                             ComplexTensor* grad_in);

}  // namespace dwe
