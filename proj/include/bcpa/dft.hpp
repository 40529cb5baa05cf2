#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bcpa/algebra.hpp"

namespace bcpa::detail {

// Cyclic DFT along one axis of a row-major dense array, any axis length.
// sign = -1 is the forward transform, +1 the inverse (scaled by 1/L here, so
// running the inverse over every axis yields a total 1/M scaling).
inline void dft_axis(std::vector<std::complex<double>>& data, std::span<const int> dims,
                     std::span<const std::size_t> strides, int axis, int sign) {
    const int L = dims[static_cast<std::size_t>(axis)];
    const std::size_t stride = strides[static_cast<std::size_t>(axis)];
    if (L == 1) return;

    // twiddle[t] = exp(sign * 2*pi*i * t / L); indexed by (k*x) mod L
    std::vector<std::complex<double>> twiddle(static_cast<std::size_t>(L));
    for (int t = 0; t < L; ++t)
        twiddle[static_cast<std::size_t>(t)] = root_value(sign * t, L);

    std::vector<std::complex<double>> line(static_cast<std::size_t>(L));
    const double scale = sign > 0 ? 1.0 / L : 1.0;
    const std::size_t block = stride * static_cast<std::size_t>(L);
    for (std::size_t base = 0; base < data.size(); base += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            const std::size_t start = base + inner;
            for (int x = 0; x < L; ++x)
                line[static_cast<std::size_t>(x)] =
                    data[start + stride * static_cast<std::size_t>(x)];
            for (int k = 0; k < L; ++k) {
                std::complex<double> acc{0.0, 0.0};
                for (int x = 0; x < L; ++x)
                    acc += line[static_cast<std::size_t>(x)] *
                           twiddle[static_cast<std::size_t>(static_cast<long long>(k) * x % L)];
                data[start + stride * static_cast<std::size_t>(k)] = acc * scale;
            }
        }
    }
}

inline void dft_all_axes(std::vector<std::complex<double>>& data, std::span<const int> dims,
                         std::span<const std::size_t> strides, int sign) {
    for (int axis = 0; axis < static_cast<int>(dims.size()); ++axis)
        dft_axis(data, dims, strides, axis, sign);
}

}  // namespace bcpa::detail
