#include "ghost/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace ghost {

namespace {

cplx permanent_enumerate(const CorrelationMatrix& m) {
  // Depth-first over column assignments; fine up to dim 6 (at most 720 products).
  const int n = m.dim;
  std::vector<bool> used(n, false);
  cplx total = 0.0;
  auto recurse = [&](auto&& self, int row, cplx partial) -> void {
    if (row == n) {
      total += partial;
      return;
    }
    for (int col = 0; col < n; ++col) {
      if (used[col]) continue;
      used[col] = true;
      self(self, row + 1, partial * m.at(row, col));
      used[col] = false;
    }
  };
  recurse(recurse, 0, cplx(1.0, 0.0));
  return total;
}

cplx permanent_ryser(const CorrelationMatrix& m) {
  // Inclusion-exclusion over column subsets, gray-code order so each step
  // updates the row sums with a single column.
  const int n = m.dim;
  std::vector<cplx> rowsum(n, cplx(0.0, 0.0));
  cplx total = 0.0;
  std::uint64_t prev = 0;
  const std::uint64_t subsets = 1ULL << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ prev;
    int col = 0;
    while (!((diff >> col) & 1ULL)) ++col;
    const double sign_col = (gray & diff) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) rowsum[i] += sign_col * m.at(i, col);
    prev = gray;
    cplx prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= rowsum[i];
    const int bits = static_cast<int>(__builtin_popcountll(gray));
    const double parity = ((n - bits) % 2) ? -1.0 : 1.0;
    total += parity * prod;
  }
  return total;
}

}  // namespace

CorrelationMatrix CorrelationMatrix::from_modes(const PowerSpectrum& spec,
                                                const FrequencyGrid& grid,
                                                std::span<const int> indices) {
  const int n = static_cast<int>(indices.size());
  CorrelationMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const int ji = indices[i];
    if (ji < 0 || ji >= grid.count())
      throw std::invalid_argument("correlation matrix: mode index out of range");
    for (int j = 0; j < n; ++j) {
      if (indices[i] == indices[j])
        m.at(i, j) = spec(grid.samples[ji]) / grid.spacing;
      else
        m.at(i, j) = 0.0;
    }
  }
  return m;
}

cplx moment_expand(const CorrelationMatrix& gamma) {
  if (gamma.dim < 1) throw std::invalid_argument("moment_expand: dimension must be >= 1");
  if (gamma.entries.size() != static_cast<std::size_t>(gamma.dim) * gamma.dim)
    throw std::invalid_argument("moment_expand: matrix is not square");
  return gamma.dim <= 6 ? permanent_enumerate(gamma) : permanent_ryser(gamma);
}

MomentCheck moment_mc_check(const PowerSpectrum& spec, const FrequencyGrid& grid,
                            std::span<const int> q_indices, std::int64_t realizations,
                            std::uint64_t seed) {
  if (q_indices.empty() || q_indices.size() > 4)
    throw std::invalid_argument("moment_mc_check: tuple size must be 1..4");
  if (realizations < 100)
    throw std::invalid_argument("moment_mc_check: need at least 100 realizations");

  MomentCheck check;
  check.analytic = moment_expand(CorrelationMatrix::from_modes(spec, grid, q_indices));
  check.realizations = realizations;

  std::vector<cplx> modes(grid.count());
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::int64_t m = 0; m < realizations; ++m) {
    sample_field_into(spec, grid, seed, m, modes);
    double prod = 1.0;
    for (int idx : q_indices) prod *= std::norm(modes[idx]);
    sum += prod;
    sumsq += prod * prod;
  }
  const double n = static_cast<double>(realizations);
  const double mean = sum / n;
  const double var = (sumsq / n - mean * mean) * n / (n - 1.0);
  check.mc_estimate = cplx(mean, 0.0);
  check.std_error = std::sqrt(var / n);
  return check;
}

}  // namespace ghost
