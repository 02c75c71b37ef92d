#pragma once

// Data-parallel inner loops with a scalar reference and SIMD variants picked
// at runtime. Every variant performs the same IEEE operation sequence per
// lane, so results are bit-identical to the scalar reference.

#include <span>
#include <string_view>
#include <vector>

namespace orthoentropy::kernels {

enum class Isa { scalar, avx2, neon };

struct KernelSet {
  Isa isa;
  std::string_view name;

  using SturmCountFn = void (*)(const double*, const double*, std::size_t, double, const double*,
                                std::size_t, int*);
  using RecurrenceFn = void (*)(const double*, const double*, std::size_t, const double*,
                                std::size_t, double*, int*);
  using TwistedVectorFn = void (*)(const double*, const double*, const double*, std::size_t, double,
                                   const double*, std::size_t, double*, int*, double*);

  SturmCountFn sturm_count_raw;
  RecurrenceFn recurrence_raw;
  TwistedVectorFn twisted_vector_raw;

  /// counts[k] = number of eigenvalues of the Jacobi matrix below shifts[k].
  /// offdiag_sq holds b_1^2..b_{n-1}^2.
  void sturm_count(std::span<const double> diag, std::span<const double> offdiag_sq, double pivmin,
                   std::span<const double> shifts, std::span<int> counts) const;

  /// p_0..p_{n-1} at each lambda, column-major into values (n * lambdas.size()),
  /// column k scaled by 2^(-512 * rescales[k]).
  void recurrence(std::span<const double> diag, std::span<const double> offdiag,
                  std::span<const double> lambdas, std::span<double> values,
                  std::span<int> rescales) const;

  /// Null vectors of L - lambda I from a twisted LDL^T/UDU^T factorization,
  /// column-major into values with entry twists[k] (0-based) equal to 1.
  /// Stable for eigenvectors whose entries decay by many orders of magnitude.
  void twisted_vector(std::span<const double> diag, std::span<const double> offdiag,
                      std::span<const double> offdiag_sq, double pivmin, std::span<const double> lambdas,
                      std::span<double> values, std::span<int> twists) const;
};

const KernelSet& scalar_kernels();

/// All variants this binary was built with and the running CPU supports,
/// scalar first.
std::vector<const KernelSet*> available_kernels();

/// The variant used by the library. Defaults to the widest available ISA;
/// the ORTHO_ENTROPY_KERNELS environment variable ("scalar", "avx2",
/// "neon") overrides the choice when that ISA is available.
const KernelSet& active_kernels();

/// Returns false (and changes nothing) if the ISA is unavailable.
bool set_active_kernels(Isa isa);

std::string_view to_string(Isa isa);

}  // namespace orthoentropy::kernels
