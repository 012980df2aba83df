#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace hyperheat::fft {

enum class Direction { forward, backward };

/// In-place unnormalized complex DFT on an n-d cube with `points` samples per side
/// (row-major, any even size). Forward uses e^{-i...}. Plans are cached per thread.
void transform(std::span<std::complex<double>> data, int dimension, std::size_t points, Direction direction);

}  // namespace hyperheat::fft
