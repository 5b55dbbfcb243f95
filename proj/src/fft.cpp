#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <new>
#include <tuple>

namespace ccdgf::fft {
namespace {

enum class Kind { R2C, C2R, C2CForward, C2CInverse };

struct PlanCache {
  std::mutex mutex;
  std::map<std::tuple<Kind, int, int>, fftw_plan> plans;

  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

// FFTW_ESTIMATE keeps plans deterministic and never touches the arrays.
fftw_plan get_plan(Kind kind, int width, int height) {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  const auto key = std::make_tuple(kind, width, height);
  if (auto it = c.plans.find(key); it != c.plans.end()) return it->second;

  const auto n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  auto real = alloc_real(n);
  auto cplx = alloc_complex(n);
  auto cplx2 = alloc_complex(n);
  fftw_plan plan = nullptr;
  switch (kind) {
    case Kind::R2C:
      plan = fftw_plan_dft_r2c_2d(height, width, real.get(), as_fftw(cplx.get()), FFTW_ESTIMATE);
      break;
    case Kind::C2R:
      plan = fftw_plan_dft_c2r_2d(height, width, as_fftw(cplx.get()), real.get(),
                                  FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
      break;
    case Kind::C2CForward:
      plan = fftw_plan_dft_2d(height, width, as_fftw(cplx.get()), as_fftw(cplx2.get()),
                              FFTW_FORWARD, FFTW_ESTIMATE);
      break;
    case Kind::C2CInverse:
      plan = fftw_plan_dft_2d(height, width, as_fftw(cplx.get()), as_fftw(cplx2.get()),
                              FFTW_BACKWARD, FFTW_ESTIMATE);
      break;
  }
  if (plan == nullptr) throw std::bad_alloc();
  c.plans.emplace(key, plan);
  return plan;
}

}  // namespace

void FftwDeleter::operator()(void* p) const noexcept { fftw_free(p); }

Buffer<double> alloc_real(std::size_t n) {
  auto* p = static_cast<double*>(fftw_malloc(sizeof(double) * (n == 0 ? 1 : n)));
  if (p == nullptr) throw std::bad_alloc();
  return Buffer<double>(p);
}

Buffer<std::complex<double>> alloc_complex(std::size_t n) {
  auto* p = static_cast<std::complex<double>*>(
      fftw_malloc(sizeof(std::complex<double>) * (n == 0 ? 1 : n)));
  if (p == nullptr) throw std::bad_alloc();
  return Buffer<std::complex<double>>(p);
}

void forward_r2c(int width, int height, double* in, std::complex<double>* out) {
  fftw_execute_dft_r2c(get_plan(Kind::R2C, width, height), in, as_fftw(out));
}

void inverse_c2r(int width, int height, std::complex<double>* in, double* out) {
  fftw_execute_dft_c2r(get_plan(Kind::C2R, width, height), as_fftw(in), out);
}

void forward_c2c(int width, int height, std::complex<double>* in, std::complex<double>* out) {
  fftw_execute_dft(get_plan(Kind::C2CForward, width, height), as_fftw(in), as_fftw(out));
}

void inverse_c2c(int width, int height, std::complex<double>* in, std::complex<double>* out) {
  fftw_execute_dft(get_plan(Kind::C2CInverse, width, height), as_fftw(in), as_fftw(out));
}

}  // namespace ccdgf::fft
