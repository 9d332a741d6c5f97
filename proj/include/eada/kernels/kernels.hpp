#pragma once

#include <cstdint>

namespace eada::kern {

/// Standard convolution geometry. Weight layout (cout, cin, kh, kw), activations NCHW.
struct ConvDims {
    int64_t n = 0, cin = 0, h = 0, w = 0;
    int64_t cout = 0, kh = 0, kw = 0;
    int64_t stride = 1, pad = 0;

    int64_t oh() const { return (h + 2 * pad - kh) / stride + 1; }
    int64_t ow() const { return (w + 2 * pad - kw) / stride + 1; }
    int64_t rows() const { return n * oh() * ow(); }        // im2col rows
    int64_t cols() const { return cin * kh * kw; }          // im2col cols
    int64_t in_numel() const { return n * cin * h * w; }
    int64_t out_numel() const { return n * cout * oh() * ow(); }
};

/// Transposed convolution geometry. Weight layout (cin, cout, kh, kw), activations NCHW.
struct ConvTDims {
    int64_t n = 0, cin = 0, h = 0, w = 0;
    int64_t cout = 0, kh = 0, kw = 0;
    int64_t stride = 1;

    int64_t oh() const { return (h - 1) * stride + kh; }
    int64_t ow() const { return (w - 1) * stride + kw; }
    int64_t in_numel() const { return n * cin * h * w; }
    int64_t out_numel() const { return n * cout * oh() * ow(); }

    /// The convolution this operator is the adjoint of (maps output space back to input space).
    ConvDims adjoint() const { return ConvDims{n, cout, oh(), ow(), cin, kh, kw, stride, 0}; }
};

// Contract shared by both implementations below:
//  - forward kernels overwrite their destination,
//  - backward kernels accumulate into dx/dw/db (callers zero-fill first when needed),
//  - gemm takes an explicit `acc` flag (false: C = A*B, true: C += A*B).
// All matrices are dense row-major.

/// Serial reference implementations: direct loop nests, no threading, no im2col.
/// Kept as the independent oracle the parallel path is tested against.
namespace ref {

template <typename T>
void gemm_nn(int64_t m, int64_t n, int64_t k, const T* A, const T* B, T* C, bool acc = false);
template <typename T>
void gemm_nt(int64_t m, int64_t n, int64_t k, const T* A, const T* B, T* C, bool acc = false);
template <typename T>
void gemm_tn(int64_t m, int64_t n, int64_t k, const T* A, const T* B, T* C, bool acc = false);

template <typename T>
void conv2d_fwd(const ConvDims& d, const T* x, const T* w, const T* b, T* y);
template <typename T>
void conv2d_bwd_input(const ConvDims& d, const T* dy, const T* w, T* dx);
template <typename T>
void conv2d_bwd_weight(const ConvDims& d, const T* x, const T* dy, T* dw, T* db);

template <typename T>
void convt2d_fwd(const ConvTDims& d, const T* x, const T* w, const T* b, T* y);
template <typename T>
void convt2d_bwd_input(const ConvTDims& d, const T* dy, const T* w, T* dx);
template <typename T>
void convt2d_bwd_weight(const ConvTDims& d, const T* x, const T* dy, T* dw, T* db);

template <typename T>
void maxpool2x2_fwd(int64_t n, int64_t c, int64_t h, int64_t w, const T* x, T* y, int64_t* argmax);
template <typename T>
void maxpool2x2_bwd(int64_t n, int64_t c, int64_t h, int64_t w, const T* dy, const int64_t* argmax,
                    T* dx);

template <typename T>
void nearest_resize_fwd(int64_t n, int64_t c, int64_t ih, int64_t iw, int64_t oh, int64_t ow,
                        const T* x, T* y);
template <typename T>
void nearest_resize_bwd(int64_t n, int64_t c, int64_t ih, int64_t iw, int64_t oh, int64_t ow,
                        const T* dy, T* dx);

}  // namespace ref

/// OpenMP implementations: convolutions lower to im2col plus a register-blocked
/// gemm microkernel; every output element is reduced serially in index order, so
/// results are deterministic for any thread count.
namespace par {

template <typename T>
void gemm_nn(int64_t m, int64_t n, int64_t k, const T* A, const T* B, T* C, bool acc = false);
template <typename T>
void gemm_nt(int64_t m, int64_t n, int64_t k, const T* A, const T* B, T* C, bool acc = false);
template <typename T>
void gemm_tn(int64_t m, int64_t n, int64_t k, const T* A, const T* B, T* C, bool acc = false);

template <typename T>
void conv2d_fwd(const ConvDims& d, const T* x, const T* w, const T* b, T* y);
template <typename T>
void conv2d_bwd_input(const ConvDims& d, const T* dy, const T* w, T* dx);
template <typename T>
void conv2d_bwd_weight(const ConvDims& d, const T* x, const T* dy, T* dw, T* db);

template <typename T>
void convt2d_fwd(const ConvTDims& d, const T* x, const T* w, const T* b, T* y);
template <typename T>
void convt2d_bwd_input(const ConvTDims& d, const T* dy, const T* w, T* dx);
template <typename T>
void convt2d_bwd_weight(const ConvTDims& d, const T* x, const T* dy, T* dw, T* db);

template <typename T>
void maxpool2x2_fwd(int64_t n, int64_t c, int64_t h, int64_t w, const T* x, T* y, int64_t* argmax);
template <typename T>
void maxpool2x2_bwd(int64_t n, int64_t c, int64_t h, int64_t w, const T* dy, const int64_t* argmax,
                    T* dx);

template <typename T>
void nearest_resize_fwd(int64_t n, int64_t c, int64_t ih, int64_t iw, int64_t oh, int64_t ow,
                        const T* x, T* y);
template <typename T>
void nearest_resize_bwd(int64_t n, int64_t c, int64_t ih, int64_t iw, int64_t oh, int64_t ow,
                        const T* dy, T* dx);

// Lowering helpers, exposed for testing.

/// col[(n*oh+oy)*ow+ox][(ci*kh+ky)*kw+kx] = x[n][ci][oy*s-pad+ky][ox*s-pad+kx], 0 outside.
template <typename T>
void im2col(const ConvDims& d, const T* x, T* col);
/// Adjoint of im2col; accumulates into x.
template <typename T>
void col2im(const ConvDims& d, const T* col, T* x);

/// NCHW -> rows of (n*h*w, c).
template <typename T>
void nchw_to_nhwc(int64_t n, int64_t c, int64_t h, int64_t w, const T* x, T* y);
/// Rows of (n*h*w, c) -> NCHW; accumulates when acc is set.
template <typename T>
void nhwc_to_nchw(int64_t n, int64_t c, int64_t h, int64_t w, const T* x, T* y, bool acc = false);

}  // namespace par

}  // namespace eada::kern
