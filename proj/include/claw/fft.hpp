#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>

#include <fftw3.h>

namespace claw::detail {

/// FFTW plan creation/destruction is not thread-safe; executions are.
inline std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

/// Circular (periodic) convolution out = in (*) kernel of two real arrays on
/// an n0 x n1 row-major grid (n1 == 1 means 1D), via real-to-complex FFTs.
inline void circular_convolve_image(int n0, int n1, std::span<const double> in,
                                    std::span<const double> kernel, std::span<double> out) {
    const std::int64_t n = static_cast<std::int64_t>(n0) * n1;
    if (in.size() != static_cast<std::size_t>(n) || kernel.size() != in.size() ||
        out.size() != in.size())
        throw std::invalid_argument("circular_convolve_image: size mismatch");

    const std::int64_t nc = n1 == 1 ? (n0 / 2 + 1) : static_cast<std::int64_t>(n0) * (n1 / 2 + 1);
    double* rbuf = fftw_alloc_real(static_cast<std::size_t>(n));
    fftw_complex* fa = fftw_alloc_complex(static_cast<std::size_t>(nc));
    fftw_complex* fb = fftw_alloc_complex(static_cast<std::size_t>(nc));

    fftw_plan forward, backward;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        if (n1 == 1) {
            forward = fftw_plan_dft_r2c_1d(n0, rbuf, fa, FFTW_ESTIMATE);
            backward = fftw_plan_dft_c2r_1d(n0, fa, rbuf, FFTW_ESTIMATE);
        } else {
            forward = fftw_plan_dft_r2c_2d(n0, n1, rbuf, fa, FFTW_ESTIMATE);
            backward = fftw_plan_dft_c2r_2d(n0, n1, fa, rbuf, FFTW_ESTIMATE);
        }
    }

    for (std::int64_t i = 0; i < n; ++i) rbuf[i] = in[static_cast<std::size_t>(i)];
    fftw_execute(forward);
    for (std::int64_t i = 0; i < n; ++i) rbuf[i] = kernel[static_cast<std::size_t>(i)];
    fftw_execute_dft_r2c(forward, rbuf, fb);

    const double scale = 1.0 / static_cast<double>(n);
    for (std::int64_t i = 0; i < nc; ++i) {
        const double ar = fa[i][0], ai = fa[i][1];
        const double br = fb[i][0], bi = fb[i][1];
        fa[i][0] = (ar * br - ai * bi) * scale;
        fa[i][1] = (ar * bi + ai * br) * scale;
    }
    fftw_execute(backward);
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = rbuf[i];

    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
    }
    fftw_free(rbuf);
    fftw_free(fa);
    fftw_free(fb);
}

} // namespace claw::detail
