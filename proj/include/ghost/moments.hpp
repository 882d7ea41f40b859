#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ghost/speckle.hpp"

namespace ghost {

/// First-order correlation matrix Gamma[i][j] = <E*(q_i) E(q'_j)>.
struct CorrelationMatrix {
  int dim = 0;
  std::vector<cplx> entries;  // row-major, dim x dim

  CorrelationMatrix() = default;
  explicit CorrelationMatrix(int n) : dim(n), entries(static_cast<std::size_t>(n) * n) {}

  cplx& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }
  const cplx& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }

  /// Matrix of the discrete modes picked by `indices`:
  /// Gamma[i][j] = S(q_i)/dq if indices[i] == indices[j], else 0.
  static CorrelationMatrix from_modes(const PowerSpectrum& spec, const FrequencyGrid& grid,
                                      std::span<const int> indices);
};

/// Sum over all permutations pi of prod_i Gamma[i][pi(i)] -- the matrix
/// permanent, i.e. the non-repeating pairing expansion of an Nth-order
/// moment of a zero-mean circular gaussian field. Exact enumeration up to
/// dim 6, Ryser inclusion-exclusion above.
cplx moment_expand(const CorrelationMatrix& gamma);

struct MomentCheck {
  cplx mc_estimate;
  double std_error = 0.0;  // of the real part of the estimate
  cplx analytic;
  std::int64_t realizations = 0;
};

/// Monte Carlo side of the pairing expansion: averages prod_i |E(q_i)|^2
/// over `realizations` speckle draws and returns it next to the
/// moment_expand prediction for the same index tuple.
MomentCheck moment_mc_check(const PowerSpectrum& spec, const FrequencyGrid& grid,
                            std::span<const int> q_indices, std::int64_t realizations,
                            std::uint64_t seed);

}  // namespace ghost
