#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "abi.hpp"
#include "orthoentropy/kernels.hpp"

namespace orthoentropy::kernels {

namespace {

constexpr KernelSet kScalar{Isa::scalar, "scalar", detail::sturm_count_scalar, detail::recurrence_scalar,
                            detail::twisted_vector_scalar};

#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelSet kAvx2{Isa::avx2, "avx2", detail::sturm_count_avx2, detail::recurrence_avx2,
                            detail::twisted_vector_avx2};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

#if defined(__aarch64__)
constexpr KernelSet kNeon{Isa::neon, "neon", detail::sturm_count_neon, detail::recurrence_neon,
                            detail::twisted_vector_neon};
#endif

const KernelSet* find(Isa isa) {
  for (const KernelSet* set : available_kernels()) {
    if (set->isa == isa) return set;
  }
  return nullptr;
}

const KernelSet* initial_choice() {
  const auto available = available_kernels();
  if (const char* env = std::getenv("ORTHO_ENTROPY_KERNELS")) {
    const std::string wanted(env);
    for (const KernelSet* set : available) {
      if (set->name == wanted) return set;
    }
  }
  return available.back();
}

std::atomic<const KernelSet*>& active_slot() {
  static std::atomic<const KernelSet*> slot{initial_choice()};
  return slot;
}

}  // namespace

void KernelSet::sturm_count(std::span<const double> diag, std::span<const double> offdiag_sq,
                            double pivmin, std::span<const double> shifts,
                            std::span<int> counts) const {
  if (diag.empty() || offdiag_sq.size() + 1 < diag.size() || counts.size() < shifts.size()) {
    throw std::invalid_argument("sturm_count: inconsistent buffer sizes");
  }
  sturm_count_raw(diag.data(), offdiag_sq.data(), diag.size(), pivmin, shifts.data(), shifts.size(),
                  counts.data());
}

void KernelSet::recurrence(std::span<const double> diag, std::span<const double> offdiag,
                           std::span<const double> lambdas, std::span<double> values,
                           std::span<int> rescales) const {
  const std::size_t n = diag.size();
  if (n == 0 || offdiag.size() + 1 < n || values.size() < n * lambdas.size() ||
      rescales.size() < lambdas.size()) {
    throw std::invalid_argument("recurrence: inconsistent buffer sizes");
  }
  recurrence_raw(diag.data(), offdiag.data(), n, lambdas.data(), lambdas.size(), values.data(),
                 rescales.data());
}

void KernelSet::twisted_vector(std::span<const double> diag, std::span<const double> offdiag,
                               std::span<const double> offdiag_sq, double pivmin,
                               std::span<const double> lambdas, std::span<double> values,
                               std::span<int> twists) const {
  const std::size_t n = diag.size();
  if (n == 0 || offdiag.size() + 1 < n || offdiag_sq.size() + 1 < n || values.size() < n * lambdas.size() ||
      twists.size() < lambdas.size()) {
    throw std::invalid_argument("twisted_vector: inconsistent buffer sizes");
  }
  std::vector<double> work(8 * n);
  twisted_vector_raw(diag.data(), offdiag.data(), offdiag_sq.data(), n, pivmin, lambdas.data(), lambdas.size(),
                     values.data(), twists.data(), work.data());
}

const KernelSet& scalar_kernels() { return kScalar; }

std::vector<const KernelSet*> available_kernels() {
  std::vector<const KernelSet*> out{&kScalar};
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2()) out.push_back(&kAvx2);
#endif
#if defined(__aarch64__)
  out.push_back(&kNeon);
#endif
  return out;
}

const KernelSet& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

bool set_active_kernels(Isa isa) {
  const KernelSet* set = find(isa);
  if (set == nullptr) return false;
  active_slot().store(set, std::memory_order_release);
  return true;
}

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace orthoentropy::kernels
