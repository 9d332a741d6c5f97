// Wall-clock comparison of the serial reference kernels against the OpenMP
// im2col+gemm path on the convolution shapes this project actually trains with.
// Build target `kernel_bench`; not registered with ctest.

#include <chrono>
#include <cstdio>
#include <vector>

#include "eada/core/rng.hpp"
#include "eada/kernels/kernels.hpp"

using namespace eada;
using namespace eada::kern;

namespace {

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_best(F&& f, int reps) {
    double best = 1e30;
    for (int r = 0; r < reps; ++r) {
        double t0 = now_s();
        f();
        best = std::min(best, now_s() - t0);
    }
    return best;
}

void bench_conv(const char* name, const ConvDims& d, int reps) {
    Rng rng(1);
    std::vector<float> x(d.in_numel()), w(d.cout * d.cols()), b(d.cout), y(d.out_numel());
    for (auto& v : x) v = static_cast<float>(rng.normal());
    for (auto& v : w) v = static_cast<float>(rng.normal());
    for (auto& v : b) v = static_cast<float>(rng.normal());

    const double flops = 2.0 * d.rows() * d.cout * d.cols();
    double t_ref = time_best([&] { ref::conv2d_fwd(d, x.data(), w.data(), b.data(), y.data()); },
                             reps);
    double t_par = time_best([&] { par::conv2d_fwd(d, x.data(), w.data(), b.data(), y.data()); },
                             reps);
    std::printf("%-28s %10.1f ms %8.2f GF/s | %10.1f ms %8.2f GF/s | speedup %5.2fx\n", name,
                t_ref * 1e3, flops / t_ref * 1e-9, t_par * 1e3, flops / t_par * 1e-9,
                t_ref / t_par);
}

void bench_gemm(const char* name, int64_t m, int64_t n, int64_t k, int reps) {
    Rng rng(2);
    std::vector<float> A(m * k), B(k * n), C(m * n);
    for (auto& v : A) v = static_cast<float>(rng.normal());
    for (auto& v : B) v = static_cast<float>(rng.normal());
    const double flops = 2.0 * m * n * k;
    double t_ref = time_best([&] { ref::gemm_nn(m, n, k, A.data(), B.data(), C.data()); }, reps);
    double t_par = time_best([&] { par::gemm_nn(m, n, k, A.data(), B.data(), C.data()); }, reps);
    std::printf("%-28s %10.1f ms %8.2f GF/s | %10.1f ms %8.2f GF/s | speedup %5.2fx\n", name,
                t_ref * 1e3, flops / t_ref * 1e-9, t_par * 1e3, flops / t_par * 1e-9,
                t_ref / t_par);
}

}  // namespace

int main() {
    std::printf("%-28s %25s | %25s |\n", "case", "serial reference", "openmp im2col+gemm");

    bench_gemm("gemm 1024x1024x1024", 1024, 1024, 1024, 3);
    bench_gemm("gemm 12544x64x75", 12544, 64, 75, 3);
    bench_gemm("gemm 3136x128x1600", 3136, 128, 1600, 3);

    // Classifier stem on a training batch of 16 (serial direct conv is slow; keep sizes sane).
    bench_conv("conv 16x3x32x32 k5 c64", ConvDims{16, 3, 32, 32, 64, 5, 5, 1, 0}, 3);
    bench_conv("conv 16x64x14x14 k5 c128", ConvDims{16, 64, 14, 14, 128, 5, 5, 1, 0}, 3);
    // Encoder body convs.
    bench_conv("conv 16x32x30x30 k3 c64", ConvDims{16, 32, 30, 30, 64, 3, 3, 1, 0}, 3);
    bench_conv("conv 16x64x26x26 k3s2 c128", ConvDims{16, 64, 26, 26, 128, 3, 3, 2, 0}, 3);
    return 0;
}
