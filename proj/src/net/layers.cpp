#include "dwe/net/layers.hpp"

#include <algorithm>
#include <stdexcept>

#include "dwe/core/parallel.hpp"

namespace dwe {

void validate(const LayerSpec& spec, int input_channels) {
  if (spec.kernel_size < 1 || spec.kernel_size % 2 == 0) {
    throw std::invalid_argument("layer: kernel size must be odd");
  }
  if (spec.maxout_pieces < 2) throw std::invalid_argument("layer: need >= 2 maxout pieces");
  if (spec.kernel_count < spec.maxout_pieces || spec.kernel_count % spec.maxout_pieces != 0) {
    throw std::invalid_argument("layer: kernel count must be a positive multiple of maxout pieces");
  }
  if (input_channels < 1) throw std::invalid_argument("layer: need >= 1 input channel");
}

ConvLayer make_layer(const LayerSpec& spec, int input_channels) {
  validate(spec, input_channels);
  ConvLayer layer;
  layer.spec = spec;
  layer.in_ch = input_channels;
  layer.w_re.assign(layer.weight_count(), 0.0);
  layer.w_im.assign(layer.weight_count(), 0.0);
  layer.b_re.assign(spec.kernel_count, 0.0);
  layer.b_im.assign(spec.kernel_count, 0.0);
  return layer;
}

LayerGrads make_grads(const ConvLayer& layer) {
  LayerGrads g;
  g.w_re.assign(layer.weight_count(), 0.0);
  g.w_im.assign(layer.weight_count(), 0.0);
  g.b_re.assign(layer.spec.kernel_count, 0.0);
  g.b_im.assign(layer.spec.kernel_count, 0.0);
  return g;
}

namespace {

// out += (wr + j wi) correlated with (xr + j xi), 'same' zero padding.
void corr_accum(const double* xr, const double* xi, int h, int w, const double* wr,
                const double* wi, int k, double* out_r, double* out_i) {
  const int pad = k / 2;
  for (int ky = 0; ky < k; ++ky) {
    const int y0 = std::max(0, pad - ky);
    const int y1 = std::min(h, h + pad - ky);
    for (int kx = 0; kx < k; ++kx) {
      const double a = wr[ky * k + kx];
      const double b = wi[ky * k + kx];
      if (a == 0.0 && b == 0.0) continue;
      const int x0 = std::max(0, pad - kx);
      const int x1 = std::min(w, w + pad - kx);
      const int dy = ky - pad;
      const int dx = kx - pad;
      for (int y = y0; y < y1; ++y) {
        const double* sr = xr + static_cast<size_t>(y + dy) * w + dx;
        const double* si = xi + static_cast<size_t>(y + dy) * w + dx;
        double* dr = out_r + static_cast<size_t>(y) * w;
        double* di = out_i + static_cast<size_t>(y) * w;
        for (int x = x0; x < x1; ++x) {
          dr[x] += a * sr[x] - b * si[x];
          di[x] += a * si[x] + b * sr[x];
        }
      }
    }
  }
}

// dw += correlation of grad against the padded input:
// dw[q] = sum_p g[p] * conj(x[p + q - pad]).
void weight_grad_accum(const double* xr, const double* xi, const double* gr, const double* gi,
                       int h, int w, int k, double* dwr, double* dwi) {
  const int pad = k / 2;
  for (int ky = 0; ky < k; ++ky) {
    const int y0 = std::max(0, pad - ky);
    const int y1 = std::min(h, h + pad - ky);
    for (int kx = 0; kx < k; ++kx) {
      const int x0 = std::max(0, pad - kx);
      const int x1 = std::min(w, w + pad - kx);
      const int dy = ky - pad;
      const int dx = kx - pad;
      double sr = 0.0, si = 0.0;
      for (int y = y0; y < y1; ++y) {
        const double* xr_row = xr + static_cast<size_t>(y + dy) * w + dx;
        const double* xi_row = xi + static_cast<size_t>(y + dy) * w + dx;
        const double* gr_row = gr + static_cast<size_t>(y) * w;
        const double* gi_row = gi + static_cast<size_t>(y) * w;
        for (int x = x0; x < x1; ++x) {
          sr += gr_row[x] * xr_row[x] + gi_row[x] * xi_row[x];
          si += gi_row[x] * xr_row[x] - gr_row[x] * xi_row[x];
        }
      }
      dwr[ky * k + kx] += sr;
      dwi[ky * k + kx] += si;
    }
  }
}

}  // namespace

ComplexTensor complex_conv2d(const ConvLayer& layer, const ComplexTensor& input) {
  if (input.ch != layer.in_ch) {
    throw std::invalid_argument("conv: input channel count does not match the kernels");
  }
  const int k = layer.spec.kernel_size;
  const size_t wpk = layer.weights_per_kernel();
  const size_t per_ch = static_cast<size_t>(k) * k;
  ComplexTensor out(layer.spec.kernel_count, input.h, input.w);

  parallel_for(layer.spec.kernel_count, [&](int64_t o_begin, int64_t o_end) {
    for (int64_t o = o_begin; o < o_end; ++o) {
      double* out_r = out.re_plane(static_cast<int>(o));
      double* out_i = out.im_plane(static_cast<int>(o));
      const double br = layer.b_re[static_cast<size_t>(o)];
      const double bi = layer.b_im[static_cast<size_t>(o)];
      for (size_t p = 0; p < out.plane(); ++p) {
        out_r[p] = br;
        out_i[p] = bi;
      }
      for (int c = 0; c < layer.in_ch; ++c) {
        const double* wr = layer.w_re.data() + static_cast<size_t>(o) * wpk + c * per_ch;
        const double* wi = layer.w_im.data() + static_cast<size_t>(o) * wpk + c * per_ch;
        corr_accum(input.re_plane(c), input.im_plane(c), input.h, input.w, wr, wi, k, out_r, out_i);
      }
    }
  });
  return out;
}

ComplexTensor amu(const std::vector<ComplexTensor>& branches) {
  if (branches.size() < 2) throw std::invalid_argument("amu: need >= 2 branches");
  for (const auto& b : branches) {
    if (!b.same_shape(branches.front())) throw std::invalid_argument("amu: shape mismatch");
  }
  ComplexTensor out = branches.front();
  for (size_t k = 0; k < out.re.size(); ++k) {
    double best = out.re[k] * out.re[k] + out.im[k] * out.im[k];
    for (size_t b = 1; b < branches.size(); ++b) {
      const double re = branches[b].re[k];
      const double im = branches[b].im[k];
      const double mag = re * re + im * im;
      if (mag > best) {
        best = mag;
        out.re[k] = re;
        out.im[k] = im;
      }
    }
  }
  return out;
}

ComplexTensor amu_group(const ComplexTensor& pre, int pieces, std::vector<uint8_t>* selection) {
  if (pieces < 2 || pre.ch % pieces != 0) throw std::invalid_argument("amu: bad piece count");
  const int out_ch = pre.ch / pieces;
  ComplexTensor out(out_ch, pre.h, pre.w);
  if (selection) selection->assign(out.plane_count(), 0);
  const size_t plane = pre.plane();
  for (int g = 0; g < out_ch; ++g) {
    double* out_r = out.re_plane(g);
    double* out_i = out.im_plane(g);
    uint8_t* sel = selection ? selection->data() + static_cast<size_t>(g) * plane : nullptr;
    for (int piece = 0; piece < pieces; ++piece) {
      const double* pr = pre.re_plane(g * pieces + piece);
      const double* pi = pre.im_plane(g * pieces + piece);
      if (piece == 0) {
        std::copy(pr, pr + plane, out_r);
        std::copy(pi, pi + plane, out_i);
        continue;
      }
      for (size_t p = 0; p < plane; ++p) {
        const double mag = pr[p] * pr[p] + pi[p] * pi[p];
        const double cur = out_r[p] * out_r[p] + out_i[p] * out_i[p];
        if (mag > cur) {
          out_r[p] = pr[p];
          out_i[p] = pi[p];
          if (sel) sel[p] = static_cast<uint8_t>(piece);
        }
      }
    }
  }
  return out;
}

ComplexTensor amu_group_backward(const ComplexTensor& grad_out, int pieces,
                                 const std::vector<uint8_t>& selection, int pre_channels) {
  if (pre_channels != grad_out.ch * pieces) throw std::invalid_argument("amu: channel mismatch");
  if (selection.size() != grad_out.plane_count()) throw std::invalid_argument("amu: bad selection");
  ComplexTensor grad_pre(pre_channels, grad_out.h, grad_out.w);
  const size_t plane = grad_out.plane();
  for (int g = 0; g < grad_out.ch; ++g) {
    const double* gr = grad_out.re_plane(g);
    const double* gi = grad_out.im_plane(g);
    const uint8_t* sel = selection.data() + static_cast<size_t>(g) * plane;
    for (size_t p = 0; p < plane; ++p) {
      const int o = g * pieces + sel[p];
      grad_pre.re_plane(o)[p] = gr[p];
      grad_pre.im_plane(o)[p] = gi[p];
    }
  }
  return grad_pre;
}

void complex_conv2d_backward(const ConvLayer& layer, const ComplexTensor& input,
                             const ComplexTensor& grad_out, LayerGrads& grads,
                             ComplexTensor* grad_in) {
  if (grad_out.ch != layer.spec.kernel_count || grad_out.h != input.h || grad_out.w != input.w) {
    throw std::invalid_argument("conv backward: grad shape mismatch");
  }
  const int k = layer.spec.kernel_size;
  const size_t wpk = layer.weights_per_kernel();
  const size_t per_ch = static_cast<size_t>(k) * k;

  // Bias gradient: plain sum of the output cotangent.
  for (int o = 0; o < layer.spec.kernel_count; ++o) {
    const double* gr = grad_out.re_plane(o);
    const double* gi = grad_out.im_plane(o);
    double sr = 0.0, si = 0.0;
    for (size_t p = 0; p < grad_out.plane(); ++p) {
      sr += gr[p];
      si += gi[p];
    }
    grads.b_re[static_cast<size_t>(o)] += sr;
    grads.b_im[static_cast<size_t>(o)] += si;
  }

  // Weight gradients, parallel over kernels.
  parallel_for(layer.spec.kernel_count, [&](int64_t o_begin, int64_t o_end) {
    for (int64_t o = o_begin; o < o_end; ++o) {
      const double* gr = grad_out.re_plane(static_cast<int>(o));
      const double* gi = grad_out.im_plane(static_cast<int>(o));
      for (int c = 0; c < layer.in_ch; ++c) {
        double* dwr = grads.w_re.data() + static_cast<size_t>(o) * wpk + c * per_ch;
        double* dwi = grads.w_im.data() + static_cast<size_t>(o) * wpk + c * per_ch;
        weight_grad_accum(input.re_plane(c), input.im_plane(c), gr, gi, input.h, input.w, k, dwr,
                          dwi);
      }
    }
  });

  if (!grad_in) return;
  *grad_in = ComplexTensor(layer.in_ch, input.h, input.w);

  // Input cotangent: convolution of the grad with the flipped conjugate
  // kernel, realised through the same correlation primitive.
  parallel_for(layer.in_ch, [&](int64_t c_begin, int64_t c_end) {
    std::vector<double> fr(per_ch), fi(per_ch);
    for (int64_t c = c_begin; c < c_end; ++c) {
      double* dr = grad_in->re_plane(static_cast<int>(c));
      double* di = grad_in->im_plane(static_cast<int>(c));
      for (int o = 0; o < layer.spec.kernel_count; ++o) {
        const double* wr = layer.w_re.data() + static_cast<size_t>(o) * wpk + c * per_ch;
        const double* wi = layer.w_im.data() + static_cast<size_t>(o) * wpk + c * per_ch;
        for (int q = 0; q < k * k; ++q) {
          const int flipped = k * k - 1 - q;
          fr[static_cast<size_t>(q)] = wr[flipped];
          fi[static_cast<size_t>(q)] = -wi[flipped];
        }
        corr_accum(grad_out.re_plane(o), grad_out.im_plane(o), grad_out.h, grad_out.w, fr.data(),
                   fi.data(), k, dr, di);
      }
    }
  });
}

}  // namespace dwe
