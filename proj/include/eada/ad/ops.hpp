#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eada/ad/var.hpp"
#include "eada/core/tensor.hpp"

namespace eada::ad {

// Layer ops. Activations are NCHW rank-4 tensors; fc activations are (N, D).
// Weight layouts: conv (cout, cin, kh, kw), transposed conv (cin, cout, kh, kw),
// fc (in, out); every bias is rank-1.

template <typename T>
Var<T> conv2d(const Var<T>& x, const Var<T>& w, const Var<T>& b, int64_t stride = 1,
              int64_t pad = 0);
template <typename T>
Var<T> convt2d(const Var<T>& x, const Var<T>& w, const Var<T>& b, int64_t stride = 1);
template <typename T>
Var<T> fc(const Var<T>& x, const Var<T>& w, const Var<T>& b);
template <typename T>
Var<T> relu(const Var<T>& x);
template <typename T>
Var<T> tanh_act(const Var<T>& x);
template <typename T>
Var<T> maxpool2x2(const Var<T>& x);
template <typename T>
Var<T> nearest_resize(const Var<T>& x, int64_t oh, int64_t ow);
template <typename T>
Var<T> concat_channels(const Var<T>& a, const Var<T>& b);
template <typename T>
Var<T> slice_channels(const Var<T>& x, int64_t c0, int64_t c1);
template <typename T>
Var<T> reshape(const Var<T>& x, std::vector<int64_t> shape);
/// (R, C) -> (C, R).
template <typename T>
Var<T> transpose2d(const Var<T>& x);
/// (N,C,H,W) -> (N,C) spatial average.
template <typename T>
Var<T> spatial_mean(const Var<T>& x);

// Elementwise / combination ops.

template <typename T>
Var<T> add(const Var<T>& a, const Var<T>& b);
template <typename T>
Var<T> sub(const Var<T>& a, const Var<T>& b);
template <typename T>
Var<T> mul(const Var<T>& a, const Var<T>& b);
template <typename T>
Var<T> scale(const Var<T>& x, T s);
/// Multiply by a constant tensor (dropout / saliency masks).
template <typename T>
Var<T> mul_const(const Var<T>& x, const Tensor<T>& m);
/// sum_i coeff_i * term_i over same-shaped terms (scalar loss combination).
template <typename T>
Var<T> affine_sum(const std::vector<std::pair<T, Var<T>>>& terms);

// Scalar-valued losses and penalties (all means over the leading batch axis or
// over all elements, as documented per op).

/// mean_i |a_i - b_i| over all elements.
template <typename T>
Var<T> l1_loss(const Var<T>& a, const Var<T>& b);
/// mean_i x_i^2 over all elements.
template <typename T>
Var<T> mean_square(const Var<T>& x);
/// Cross-entropy vs integer labels, optionally per-sample weighted: mean_n w_n * CE_n.
/// Weights are treated as constants.
template <typename T>
Var<T> softmax_ce(const Var<T>& logits, const std::vector<int64_t>& labels,
                  const std::vector<T>* weights = nullptr);
/// Cross-entropy vs constant probability rows: mean_n -sum_c t_nc log softmax(z_n)_c.
template <typename T>
Var<T> softmax_ce_soft(const Var<T>& logits, const Tensor<T>& target_probs);
/// Cross-entropy against the uniform distribution over classes.
template <typename T>
Var<T> softmax_ce_uniform(const Var<T>& logits);
/// Generalized cross-entropy mean_n (1 - p_{y_n}^q) / q.
template <typename T>
Var<T> generalized_ce(const Var<T>& logits, const std::vector<int64_t>& labels, T q);
/// Off-diagonal squared Frobenius norm of W W^T with W viewed as (rows, numel/rows).
template <typename T>
Var<T> offdiag_gram_penalty(const Var<T>& w);
/// Off-diagonal squared Frobenius norm of the sample covariance of x (N, C), N >= 2.
template <typename T>
Var<T> offdiag_cov_penalty(const Var<T>& x);

// Graph-free helpers on plain tensors.

/// Row-wise softmax of (N, C) logits.
template <typename T>
Tensor<T> softmax_rows(const Tensor<T>& logits);
/// Per-row cross-entropy values vs integer labels.
template <typename T>
std::vector<T> per_sample_ce(const Tensor<T>& logits, const std::vector<int64_t>& labels);

}  // namespace eada::ad
