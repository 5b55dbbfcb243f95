#pragma once

// Thin RAII layer over FFTW. Plans are cached per (kind, width, height);
// plan creation is serialized, execution uses the new-array interface and
// is safe from any thread.

#include <complex>
#include <cstddef>
#include <memory>

namespace ccdgf::fft {

struct FftwDeleter {
  void operator()(void* p) const noexcept;
};

template <class T>
using Buffer = std::unique_ptr<T[], FftwDeleter>;

Buffer<double> alloc_real(std::size_t n);
Buffer<std::complex<double>> alloc_complex(std::size_t n);

// Real <-> half-spectrum (height x (width/2 + 1)), unnormalized.
void forward_r2c(int width, int height, double* in, std::complex<double>* out);
void inverse_c2r(int width, int height, std::complex<double>* in, double* out);

// Full complex transforms (height x width), unnormalized.
void forward_c2c(int width, int height, std::complex<double>* in, std::complex<double>* out);
void inverse_c2c(int width, int height, std::complex<double>* in, std::complex<double>* out);

}  // namespace ccdgf::fft
