#include <cassert>
#include <cstdlib>
#include <string_view>

#include "dwho/simd/kernels.hpp"

namespace dwho::simd {
namespace {

bool cpu_has_avx2() {
#if defined(DWHO_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelSet& select_kernels() {
  const auto sets = available_kernels();
  if (const char* forced = std::getenv("DWHO_SIMD")) {
    for (const KernelSet* set : sets) {
      if (set->name == std::string_view{forced}) return *set;
    }
  }
  return *sets.back();
}

}  // namespace

std::vector<const KernelSet*> available_kernels() {
  std::vector<const KernelSet*> sets{&scalar_kernels()};
#if defined(DWHO_HAVE_AVX2)
  if (cpu_has_avx2()) sets.push_back(&detail::avx2_kernels());
#endif
#if defined(DWHO_HAVE_NEON)
  sets.push_back(&detail::neon_kernels());
#endif
  return sets;
}

const KernelSet& active_kernels() {
  static const KernelSet& set = select_kernels();
  return set;
}

double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b) {
  assert(w.size() == a.size() && a.size() == b.size());
  return active_kernels().weighted_dot(w.data(), a.data(), b.data(), w.size());
}

void complex_axpy(std::complex<double> alpha, std::span<const double> x, std::span<double> re,
                  std::span<double> im) {
  assert(x.size() == re.size() && re.size() == im.size());
  active_kernels().complex_axpy(alpha.real(), alpha.imag(), x.data(), re.data(), im.data(), x.size());
}

double weighted_norm2(std::span<const double> w, std::span<const double> re, std::span<const double> im) {
  assert(w.size() == re.size() && re.size() == im.size());
  return active_kernels().weighted_norm2(w.data(), re.data(), im.data(), w.size());
}

std::pair<double, double> weighted_cross(std::span<const double> w, std::span<const double> re,
                                         std::span<const double> im, std::span<const double> dre,
                                         std::span<const double> dim) {
  assert(w.size() == re.size() && re.size() == im.size() && im.size() == dre.size() &&
         dre.size() == dim.size());
  return active_kernels().weighted_cross(w.data(), re.data(), im.data(), dre.data(), dim.data(),
                                         w.size());
}

void norm2(std::span<const double> re, std::span<const double> im, std::span<double> out) {
  assert(re.size() == im.size() && im.size() == out.size());
  active_kernels().norm2(re.data(), im.data(), out.data(), re.size());
}

}  // namespace dwho::simd
