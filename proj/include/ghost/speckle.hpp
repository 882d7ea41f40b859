#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ghost/spectrum.hpp"

namespace ghost {

using cplx = std::complex<double>;

/// Stateless 64-bit mix; used to derive independent per-realization streams
/// from (seed, index) so ensemble members are reproducible in any order.
std::uint64_t splitmix64(std::uint64_t state);

/// Engine for realization `index` of the stream identified by `seed`.
std::mt19937_64 realization_engine(std::uint64_t seed, std::int64_t index);

/// One realization of the source spectral amplitude E(q). Mode j is an
/// independent circular complex gaussian with <|E_j|^2> = S(q_j) / dq, so
/// discrete sums with weight dq reproduce <E*(q)E(q')> = S(q) delta(q-q')
/// in the continuum limit.
struct SpectralAmplitude {
  FrequencyGrid grid;
  std::vector<cplx> values;
  std::int64_t realization_index = 0;
  std::uint64_t seed = 0;
};

SpectralAmplitude sample_field(const PowerSpectrum& spec, const FrequencyGrid& grid,
                               std::uint64_t seed, std::int64_t index);

/// Hot-path variant writing into a caller-owned buffer (size = grid count).
void sample_field_into(const PowerSpectrum& spec, const FrequencyGrid& grid,
                       std::uint64_t seed, std::int64_t index, std::span<cplx> out);

}  // namespace ghost
